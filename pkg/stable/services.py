import logging
from dataclasses import asdict

import numpy as np
from django.conf import settings
from django.core.cache import cache

from core.files import file_digest

from .distribution import sample_many
from .estimation import fit
from .params import FitConfig, FitReport, StableParams

logger = logging.getLogger(__name__)


def fit_cached(values, config: FitConfig | None = None) -> FitReport:
    """Подгонка с кешированием по дайджесту выборки и настроек"""
    config = config or FitConfig()
    array = np.asarray(values, dtype=float)
    cache_key = f"stable_fit_{file_digest(array.tobytes(), sorted(asdict(config).items()))}"
    cached = cache.get(cache_key)

    if cached is None:
        report = fit(array, config)
        cache.set(cache_key, report, settings.FIT_CACHE_SECONDS)
        return report

    logger.debug("Результат подгонки взят из кеша: %s", cache_key)
    return cached


def synthetic_trace(params: StableParams, count: int, seed: int) -> list[float]:
    """Синтетическая трасса неотрицательных задержек (отрицательные перевыбираются)"""
    rng = np.random.default_rng(seed)
    values: list[float] = []
    while len(values) < count:
        batch = sample_many(params, rng, count)
        values.extend(float(value) for value in batch if value >= 0.0)
    return values[:count]
