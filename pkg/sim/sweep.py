"""Серии прогонов по одной оси: порог интервала, доля потерь или сценарий."""

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import groupby
from pathlib import Path

import django
import numpy as np

from core.exceptions import ConfigError, FogWarnError
from core.files import atomic_write_text, canonical_json, stable_seed
from fog.algorithms import Algorithm
from trajectory.sources import read_document

from .config import RunConfig, ScenarioSource
from .engine import run

logger = logging.getLogger(__name__)

AXES = {"headway": "headway", "loss": "loss", "loss_rate": "loss", "scenario": "scenario"}
METRICS = ("tp", "fp", "fn", "precision", "recall")


@dataclass(frozen=True)
class SweepAxis:
    name: str
    values: tuple[str, ...]

    @classmethod
    def parse(cls, text):
        """Разбор `headway=1,2,3`, `loss=0,0.03` или `scenario=a.json,b.json`"""
        name, separator, raw = str(text).partition("=")
        name = name.strip().lower()
        if not separator or name not in AXES:
            raise ConfigError(f"Ось задаётся как headway=..., loss=... или scenario=...: {text}")
        values = tuple(value.strip() for value in raw.split(",") if value.strip())
        axis = cls(AXES[name], values)
        for value in values:
            axis.check(value)
        return axis

    def check(self, value):
        if self.name == "scenario":
            return
        try:
            number = float(value)
        except ValueError:
            raise ConfigError(f"Значение оси {self.name} должно быть числом: {value}") from None
        if self.name == "headway" and not number > 0:
            raise ConfigError(f"Порог интервала должен быть положительным: {value}")
        if self.name == "loss" and not 0 <= number <= 1:
            raise ConfigError(f"Доля потерь должна лежать в [0, 1]: {value}")


@dataclass(frozen=True)
class SweepCell:
    axis: str
    value: str
    algorithm: Algorithm
    replicate: int
    seed: int
    config: RunConfig

    @property
    def slug(self):
        value = Path(self.value).stem if self.axis == "scenario" else self.value
        return f"{self.axis}-{value}-{self.algorithm.value}-{self.replicate:03d}"


@dataclass(frozen=True)
class SweepResult:
    rows: list[dict]
    means: list[dict]


def apply_axis(base: RunConfig, axis, value) -> RunConfig:
    if axis == "headway":
        return replace(base, headway=float(value))
    if axis == "loss":
        return base.with_loss_rate(float(value))
    path = Path(value)
    if not path.is_absolute():
        path = base.base_dir / path
    try:
        document = read_document(path)
    except OSError as exc:
        raise ConfigError(f"Не удалось прочитать сценарий {path}: {exc}") from exc
    seed = document.get("seed", base.scenario.seed)
    return replace(base, scenario=ScenarioSource(document, path.parent, int(seed), str(path)))


def build_cells(base: RunConfig, axis: SweepAxis, algorithms, repeats=1, paired=False) -> list[SweepCell]:
    """Ячейки серии; при paired сид зависит только от повтора, общий для всех значений и алгоритмов"""
    cells = []
    for value in axis.values:
        for algorithm in algorithms:
            algorithm = Algorithm.parse(algorithm)
            for replicate in range(repeats):
                if paired:
                    seed = stable_seed(base.seed, axis.name, replicate)
                else:
                    seed = stable_seed(base.seed, axis.name, value, algorithm.value, replicate)
                cells.append(SweepCell(axis.name, value, algorithm, replicate, seed, base))
    return cells


def _blank_row(cell: SweepCell):
    return {
        "axis": cell.axis,
        "value": cell.value,
        "algorithm": cell.algorithm.value,
        "replicate": cell.replicate,
        "seed": cell.seed,
    }


def _failed_row(row, error):
    return {**row, **{name: None for name in METRICS}, "error": error}


def run_cell(cell: SweepCell) -> dict:
    """Один прогон серии; ошибка записывается в строку, а не прерывает серию"""
    row = _blank_row(cell)
    try:
        config = replace(
            apply_axis(cell.config, cell.axis, cell.value),
            algorithm=cell.algorithm,
            seed=cell.seed,
            name=cell.slug,
        )
        report = run(config)
    except (FogWarnError, OSError) as exc:
        logger.warning("Ячейка %s завершилась ошибкой: %s", cell.slug, exc)
        return _failed_row(row, str(exc))
    except Exception as exc:
        logger.exception("Ячейка %s: непредвиденная ошибка", cell.slug)
        return _failed_row(row, f"{type(exc).__name__}: {exc}")

    return {**row, **report.match.as_dict(), **report.score.as_dict(), "error": None}


def _read_cell(path):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def sweep(
    base: RunConfig,
    axis: SweepAxis,
    algorithms,
    repeats=1,
    workers=1,
    cells_dir=None,
    resume=False,
    paired=False,
):
    """Все ячейки (значение × алгоритм × повтор); готовые файлы ячеек используются при resume"""
    if repeats < 1:
        raise ConfigError(f"Число повторов должно быть положительным: {repeats}")
    cells = build_cells(base, axis, algorithms, repeats, paired)
    rows: dict[str, dict] = {}
    todo = []
    for cell in cells:
        path = Path(cells_dir) / f"{cell.slug}.json" if cells_dir else None
        if resume and path is not None and path.exists():
            rows[cell.slug] = _read_cell(path)
        else:
            todo.append(cell)
    if resume and len(todo) < len(cells):
        logger.info("Продолжение серии: готово %d из %d ячеек", len(cells) - len(todo), len(cells))

    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=django.setup) as executor:
            results = list(executor.map(run_cell, todo))
    else:
        results = [run_cell(cell) for cell in todo]

    for cell, row in zip(todo, results):
        rows[cell.slug] = row
        if cells_dir:
            atomic_write_text(Path(cells_dir) / f"{cell.slug}.json", canonical_json(row))

    ordered = [rows[cell.slug] for cell in cells]
    return SweepResult(rows=ordered, means=aggregate(ordered))


def _mean_and_error(values):
    values = np.asarray([value for value in values if value is not None], dtype=float)
    if values.size == 0:
        return None, None
    error = float(values.std(ddof=1) / math.sqrt(values.size)) if values.size > 1 else 0.0
    return float(values.mean()), error


def aggregate(rows) -> list[dict]:
    """Среднее и стандартная ошибка по повторам для каждой пары (значение, алгоритм)"""
    means = []
    for (axis, value, algorithm), group in groupby(
        rows, key=lambda row: (row["axis"], row["value"], row["algorithm"])
    ):
        group = list(group)
        precision, precision_se = _mean_and_error(row["precision"] for row in group)
        recall, recall_se = _mean_and_error(row["recall"] for row in group)
        means.append(
            {
                "axis": axis,
                "value": value,
                "algorithm": algorithm,
                "runs": len(group),
                "failed": sum(1 for row in group if row.get("error")),
                "precision_mean": precision,
                "precision_se": precision_se,
                "recall_mean": recall,
                "recall_se": recall_se,
            }
        )
    return means
