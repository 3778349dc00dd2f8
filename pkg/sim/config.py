"""Конфигурация прогона: JSON-документ, проверяемый формами Django."""

import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

from django.conf import settings

from channel.latency import ConstantLatency, StableLatency, TraceLatency
from channel.presets import preset
from channel.transmission import ChannelConfig
from core.exceptions import ConfigError, FogWarnError
from core.files import stable_seed
from core.validation import clean_form
from fog.algorithms import Algorithm
from fog.state import FogThresholds, LatencyEstimator
from stable.io import read_latency_trace
from stable.params import StableParams
from trajectory.sources import read_document, scenario_from_document

from .forms import ChannelForm, EmissionForm, FogForm, OutputForm, RunConfigForm, ThresholdsForm

logger = logging.getLogger(__name__)

SECTIONS = {
    "scenario",
    "channel",
    "cloud_channel",
    "algorithm",
    "thresholds",
    "fog",
    "emission",
    "output",
    "seed",
}


@dataclass(frozen=True)
class ScenarioSource:
    """Откуда брать сценарий: описание генератора или среза траекторий"""

    document: dict
    base_dir: Path
    seed: int
    name: str

    def load(self):
        return scenario_from_document(self.document, self.base_dir, self.seed, self.name)

    def as_dict(self):
        return {"name": self.name, "seed": self.seed, "document": self.document}


@dataclass(frozen=True)
class RunConfig:
    scenario: ScenarioSource
    channel: ChannelConfig
    cloud_channel: ChannelConfig
    algorithm: Algorithm
    tau: float = 10.0
    gamma: float = 0.2
    headway: float = 3.0
    d_col: float = 2.0
    predict_horizon: float = 5.0
    match_tolerance: float | None = None
    estimator: LatencyEstimator = LatencyEstimator.RANDOM
    emission_phase: float = 0.0
    emission_jitter: float = 0.0
    seed: int = 0
    output_dir: Path = field(default_factory=lambda: Path(settings.FOGWARN_OUTPUT_DIR))
    base_dir: Path = Path(".")
    name: str = "run"

    @property
    def tolerance(self):
        return self.predict_horizon if self.match_tolerance is None else self.match_tolerance

    def channel_for(self, comm_range) -> ChannelConfig:
        """Канал алгоритма; радиус связи задаёт сценарий"""
        config = self.cloud_channel if self.algorithm is Algorithm.CBW else self.channel
        return replace(config, comm_range=comm_range)

    def fog_thresholds(self, scenario) -> FogThresholds:
        return FogThresholds(
            tau=self.tau,
            gamma=self.gamma,
            headway=self.headway,
            d_col=self.d_col,
            predict_horizon=self.predict_horizon,
            slot_period=scenario.slot_period,
            comm_range=scenario.comm_range,
        )

    def with_loss_rate(self, loss_rate):
        return replace(
            self,
            channel=replace(self.channel, loss_rate=loss_rate),
            cloud_channel=replace(self.cloud_channel, loss_rate=loss_rate),
        )

    def as_dict(self):
        return {
            "name": self.name,
            "scenario": self.scenario.as_dict(),
            "channel": self.channel.as_dict(),
            "cloud_channel": self.cloud_channel.as_dict(),
            "algorithm": self.algorithm.value,
            "thresholds": {
                "tau": self.tau,
                "gamma": self.gamma,
                "headway": self.headway,
                "d_col": self.d_col,
                "predict_horizon": self.predict_horizon,
                "match_tolerance": self.tolerance,
            },
            "fog": {"estimator": self.estimator.value},
            "emission": {"phase": self.emission_phase, "jitter": self.emission_jitter},
            "seed": self.seed,
        }


def channel_from_section(section, base_dir, label) -> ChannelConfig:
    cleaned = clean_form(ChannelForm, section, label)
    loss_rate = cleaned["loss_rate"]
    if cleaned["preset"]:
        return preset(cleaned["preset"], loss_rate=loss_rate)

    model = cleaned["model"]
    if model == "stable":
        try:
            params = StableParams(cleaned["alpha"], cleaned["beta"], cleaned["mu"], cleaned["sigma"])
        except FogWarnError as exc:
            raise ConfigError(f"{label}: {exc}") from exc
        latency = StableLatency(params)
    elif model == "trace":
        path = Path(base_dir) / cleaned["trace"]
        try:
            values = read_latency_trace(path)
        except OSError as exc:
            raise ConfigError(f"{label}: не удалось прочитать трассу {path}: {exc}") from exc
        latency = TraceLatency(tuple(values), wrap=cleaned["wrap"], source=str(path))
    else:
        latency = ConstantLatency(cleaned["latency_ms"])
    return ChannelConfig(latency=latency, loss_rate=loss_rate, name=model)


def scenario_from_section(section, base_dir, master_seed, label) -> ScenarioSource:
    """Раздел scenario: описание целиком или ссылка {"document": путь}"""
    if not isinstance(section, dict):
        raise ConfigError(f"{label}: ожидался объект")
    seed = section.get("seed")
    name = label
    if "document" in section:
        path = Path(base_dir) / section["document"]
        try:
            document = read_document(path)
        except OSError as exc:
            raise ConfigError(f"{label}: не удалось прочитать {path}: {exc}") from exc
        base_dir, name = path.parent, str(path)
        seed = document.get("seed") if seed is None else seed
    else:
        document = section

    if seed is None:
        seed = stable_seed(master_seed, "scenario")
    source = ScenarioSource(document=document, base_dir=Path(base_dir), seed=int(seed), name=name)
    source.load()
    return source


def run_config_from_dict(data, base_dir=".", name="run") -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError(f"{name}: конфигурация должна быть объектом")
    unknown = sorted(set(data) - SECTIONS)
    if unknown:
        raise ConfigError(f"{name}: неизвестные разделы {', '.join(unknown)}")
    if "scenario" not in data or "channel" not in data:
        raise ConfigError(f"{name}: обязательны разделы scenario и channel")

    top = clean_form(RunConfigForm, {"algorithm": data.get("algorithm"), "seed": data.get("seed")}, name)
    thresholds = clean_form(ThresholdsForm, data.get("thresholds", {}), "thresholds")
    fog = clean_form(FogForm, data.get("fog", {}), "fog")
    emission = clean_form(EmissionForm, data.get("emission", {}), "emission")
    output = clean_form(OutputForm, data.get("output", {}), "output")

    channel = channel_from_section(data["channel"], base_dir, "channel")
    if "cloud_channel" in data:
        cloud_channel = channel_from_section(data["cloud_channel"], base_dir, "cloud_channel")
    else:
        cloud_channel = preset("cloud_lte", loss_rate=channel.loss_rate)

    output_dir = Path(output["directory"]) if output["directory"] else Path(settings.FOGWARN_OUTPUT_DIR)
    if not output_dir.is_absolute() and output["directory"]:
        output_dir = Path(base_dir) / output_dir

    return RunConfig(
        scenario=scenario_from_section(data["scenario"], base_dir, top["seed"], "scenario"),
        channel=channel,
        cloud_channel=cloud_channel,
        algorithm=Algorithm.parse(top["algorithm"]),
        tau=thresholds["tau"],
        gamma=thresholds["gamma"],
        headway=thresholds["headway"],
        d_col=thresholds["d_col"],
        predict_horizon=thresholds["predict_horizon"],
        match_tolerance=thresholds["match_tolerance"],
        estimator=LatencyEstimator(fog["estimator"]),
        emission_phase=emission["phase"],
        emission_jitter=emission["jitter"],
        seed=top["seed"],
        output_dir=output_dir,
        base_dir=Path(base_dir),
        name=name,
    )


def load_run_config(path) -> RunConfig:
    """Читает конфигурацию; OSError пробрасывается, чтобы команда назвала файл"""
    path = Path(path)
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: некорректный JSON ({exc})") from None
    try:
        return run_config_from_dict(data, path.parent, name=path.stem)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
