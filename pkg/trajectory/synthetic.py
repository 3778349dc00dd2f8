"""Синтетический перекрёсток.

Четыре прямых подхода через центр, правостороннее движение со смещением
полосы lane_offset. Момент прохождения центральной линии привязан к сетке
слотов, скорость одна на подход (без обгонов). Необязательный манёвр
entry_accel длится entry_time секунд до центра (до него ТС едет равномерно),
ускорение accel действует после центра; при торможении ТС останавливается.
"""

import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import ConfigError
from core.validation import clean_form

from .forms import ApproachForm, GeneratorForm
from .points import TrajectoryPoint
from .scenario import TIME_EPS, Scenario

logger = logging.getLogger(__name__)

# направление движения и смещение полосы (вправо по ходу) для каждого подхода
DIRECTIONS = {
    "west": ((1.0, 0.0), (0.0, -1.0)),
    "east": ((-1.0, 0.0), (0.0, 1.0)),
    "south": ((0.0, 1.0), (1.0, 0.0)),
    "north": ((0.0, -1.0), (-1.0, 0.0)),
}


@dataclass(frozen=True)
class ApproachSpec:
    direction: str
    count: int
    first_arrival: float
    spacing: float = 0.0
    accel: float = 0.0
    arrival_jitter: float = 0.0
    entry_accel: float = 0.0
    entry_time: float = 0.0

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ConfigError(f"Неизвестное направление подхода: {self.direction}")
        if self.count < 0:
            raise ConfigError(f"Отрицательное число ТС на подходе {self.direction}: {self.count}")
        if min(self.first_arrival, self.spacing, self.arrival_jitter, self.entry_time) < 0:
            raise ConfigError(f"Отрицательные времена на подходе {self.direction}")


@dataclass(frozen=True)
class SynthSpec:
    approaches: tuple[ApproachSpec, ...]
    center: tuple[float, float] = (0.0, 0.0)
    comm_range: float = 500.0
    t_start: float = 0.0
    duration: float = 100.0
    slot_period: float = 1.0
    speed_min: float = 8.0
    speed_max: float = 12.0
    lane_offset: float = 1.0
    approach_length: float | None = None
    name: str = field(default="synthetic", compare=False)

    def __post_init__(self):
        if self.speed_min <= 0 or self.speed_max < self.speed_min:
            raise ConfigError(
                f"Некорректный диапазон скоростей: [{self.speed_min}, {self.speed_max}]"
            )
        if self.comm_range <= 0 or self.duration <= 0 or self.slot_period <= 0:
            raise ConfigError("Радиус связи, длительность и период слота должны быть положительными")
        if self.lane_offset < 0:
            raise ConfigError(f"Отрицательное смещение полосы: {self.lane_offset}")

    @property
    def length(self):
        return self.comm_range if self.approach_length is None else self.approach_length

    @classmethod
    def from_dict(cls, data, name="synthetic"):
        cleaned = clean_form(GeneratorForm, data, "generator")
        approaches = tuple(
            ApproachSpec(**clean_form(ApproachForm, item, f"generator.approaches[{index}]"))
            for index, item in enumerate(cleaned.pop("approaches"))
        )
        cleaned["center"] = tuple(float(value) for value in cleaned["center"])
        return cls(approaches=approaches, name=name, **cleaned)

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        return cls.from_dict(data.get("generator", data), name=str(path))


def _snap(time, t_start, slot_period):
    return t_start + round((time - t_start) / slot_period) * slot_period


def _travel(speed, accel, elapsed):
    """Путь, скорость и ускорение через elapsed секунд после прохождения центра"""
    if elapsed <= 0 or accel == 0:
        return speed * elapsed, speed, 0.0 if elapsed <= 0 else accel
    if accel < 0 and elapsed >= -speed / accel:
        stop = -speed / accel
        return speed * stop + 0.5 * accel * stop**2, 0.0, 0.0
    return speed * elapsed + 0.5 * accel * elapsed**2, speed + accel * elapsed, accel


def _approach(speed, entry_accel, entry_time, elapsed):
    """Путь (отрицательный), скорость и ускорение за -elapsed секунд до центра"""
    if elapsed >= -entry_time:
        return speed * elapsed + 0.5 * entry_accel * elapsed**2, speed + entry_accel * elapsed, entry_accel
    entry_speed = speed - entry_accel * entry_time
    start = -speed * entry_time + 0.5 * entry_accel * entry_time**2
    return start + entry_speed * (elapsed + entry_time), entry_speed, 0.0


def _motion(approach, speed, elapsed):
    if elapsed < 0:
        return _approach(speed, approach.entry_accel, approach.entry_time, elapsed)
    return _travel(speed, approach.accel, elapsed)


def _enter_before(approach, speed, length):
    """Время от въезда на расстоянии length до центра"""
    entry_speed = speed - approach.entry_accel * approach.entry_time
    if entry_speed <= 0:
        raise ConfigError(
            f"Манёвр подхода {approach.direction} требует скорости {entry_speed:.2f} до въезда"
        )
    manoeuvre = speed * approach.entry_time - 0.5 * approach.entry_accel * approach.entry_time**2
    if manoeuvre >= length:
        raise ConfigError(f"Манёвр подхода {approach.direction} длиннее самого подхода ({length} м)")
    return approach.entry_time + (length - manoeuvre) / entry_speed


def _exit_after(speed, accel, length):
    """Время от центра до выезда на расстояние length (inf, если ТС остановится раньше)"""
    if accel == 0:
        return length / speed
    discriminant = speed**2 + 2 * accel * length
    if discriminant < 0:
        return math.inf
    return (-speed + math.sqrt(discriminant)) / accel


def _vehicle_points(vehicle_id, approach, speed, t_center, spec):
    (ux, uy), (ox, oy) = DIRECTIONS[approach.direction]
    cx = spec.center[0] + ox * spec.lane_offset
    cy = spec.center[1] + oy * spec.lane_offset
    heading = math.atan2(uy, ux)

    t_end = spec.t_start + spec.duration
    first = max(t_center - _enter_before(approach, speed, spec.length), spec.t_start)
    last = min(t_center + _exit_after(speed, approach.accel, spec.length), t_end)
    k_first = math.ceil((first - spec.t_start) / spec.slot_period - TIME_EPS)
    k_last = math.floor((last - spec.t_start) / spec.slot_period + TIME_EPS)

    points = []
    for k in range(max(k_first, 0), k_last + 1):
        time = spec.t_start + k * spec.slot_period
        travelled, current_speed, current_accel = _motion(approach, speed, time - t_center)
        points.append(
            TrajectoryPoint(
                time=time,
                vehicle_id=vehicle_id,
                x=cx + ux * travelled,
                y=cy + uy * travelled,
                speed=current_speed,
                heading=heading,
                accel_x=ux * current_accel,
                accel_y=uy * current_accel,
                velocity_x=ux * current_speed,
                velocity_y=uy * current_speed,
            )
        )
    return points


def synth_scenario(spec: SynthSpec, rng: np.random.Generator) -> Scenario:
    vehicles = {}
    for approach in spec.approaches:
        speed = float(rng.uniform(spec.speed_min, spec.speed_max))
        for index in range(approach.count):
            t_center = approach.first_arrival + index * approach.spacing
            if approach.arrival_jitter > 0:
                t_center += float(rng.uniform(0.0, approach.arrival_jitter))
            t_center = _snap(t_center, spec.t_start, spec.slot_period)

            vehicle_id = f"{approach.direction}-{index:02d}"
            if vehicle_id in vehicles:
                raise ConfigError(f"Подход {approach.direction} задан дважды")
            points = _vehicle_points(vehicle_id, approach, speed, t_center, spec)
            if points:
                vehicles[vehicle_id] = points
            else:
                logger.debug("ТС %s не попадает в окно сценария", vehicle_id)

    logger.info("Сгенерирован сценарий %s: ТС %d", spec.name, len(vehicles))
    return Scenario(
        vehicles=vehicles,
        fog_location=spec.center,
        comm_range=spec.comm_range,
        t_start=spec.t_start,
        duration=spec.duration,
        slot_period=spec.slot_period,
    )
