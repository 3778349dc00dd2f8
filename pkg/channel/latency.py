"""Модели задержки прикладного уровня (мс)."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import ConfigError, DomainError
from stable.distribution import sample_nonnegative
from stable.params import StableParams
from stable.services import fit_cached

logger = logging.getLogger(__name__)

# практически вырожденный масштаб для узла, которому задержка известна точно
EXACT_SIGMA = 1e-9


@dataclass(frozen=True)
class StableLatency:
    params: StableParams

    kind = "stable"

    def sampler(self):
        return StableSampler(self.params)

    def estimator_params(self):
        return self.params

    def as_dict(self):
        return {"model": self.kind, **self.params.as_dict()}


@dataclass(frozen=True)
class TraceLatency:
    """Воспроизведение трассы по порядку; без wrap исчерпание трассы считается ошибкой"""

    values: tuple[float, ...]
    wrap: bool = False
    source: str = ""

    kind = "trace"

    def __post_init__(self):
        if not self.values:
            raise ConfigError(f"Пустая трасса задержек {self.source}".strip())
        if any(not math.isfinite(value) or value < 0 for value in self.values):
            raise ConfigError(f"Трасса {self.source} содержит отрицательные задержки".strip())

    def sampler(self):
        return TraceSampler(self)

    def estimator_params(self):
        return fit_cached(self.values).params

    def as_dict(self):
        return {"model": self.kind, "source": self.source, "samples": len(self.values), "wrap": self.wrap}


@dataclass(frozen=True)
class ConstantLatency:
    latency_ms: float

    kind = "constant"

    def __post_init__(self):
        if not (math.isfinite(self.latency_ms) and self.latency_ms >= 0):
            raise ConfigError(f"Некорректная постоянная задержка: {self.latency_ms}")

    def sampler(self):
        return ConstantSampler(self.latency_ms)

    def estimator_params(self):
        return StableParams(alpha=2.0, beta=0.0, mu=self.latency_ms, sigma=EXACT_SIGMA)

    def as_dict(self):
        return {"model": self.kind, "latency_ms": self.latency_ms}


LatencyModel = StableLatency | TraceLatency | ConstantLatency


class StableSampler:
    def __init__(self, params):
        self.params = params

    def draw(self, rng: np.random.Generator) -> float:
        try:
            return sample_nonnegative(self.params, rng)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc


class TraceSampler:
    def __init__(self, model: TraceLatency):
        self.model = model
        self.cursor = 0

    def draw(self, rng=None) -> float:
        values = self.model.values
        if self.cursor >= len(values):
            if not self.model.wrap:
                raise ConfigError(
                    f"Трасса задержек {self.model.source} исчерпана после {len(values)} пакетов".strip()
                )
            logger.debug("Трасса задержек начата заново")
            self.cursor = 0
        value = values[self.cursor]
        self.cursor += 1
        return value


class ConstantSampler:
    def __init__(self, latency_ms):
        self.latency_ms = latency_ms

    def draw(self, rng=None) -> float:
        return self.latency_ms
