import logging
import math
from bisect import bisect_right
from dataclasses import asdict, dataclass, replace
from functools import cached_property

import numpy as np

from core.exceptions import DomainError
from core.geometry import Point, distance, slot_times

from .kinematics import derive_kinematics
from .points import TrajectoryPoint

logger = logging.getLogger(__name__)

TIME_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class Scenario:
    """Срез траекторий вокруг узла тумана"""

    vehicles: dict[str, list[TrajectoryPoint]]
    fog_location: Point
    comm_range: float
    t_start: float
    duration: float
    slot_period: float

    def __post_init__(self):
        if not self.comm_range > 0:
            raise DomainError(f"Радиус связи должен быть положительным: {self.comm_range}")
        if not self.duration > 0:
            raise DomainError(f"Длительность должна быть положительной: {self.duration}")
        if not self.slot_period > 0:
            raise DomainError(f"Период слота должен быть положительным: {self.slot_period}")
        if not (math.isfinite(self.t_start) and self.t_start >= 0):
            raise DomainError(f"Некорректное время начала: {self.t_start}")

    @property
    def end_time(self):
        return self.t_start + self.duration

    @property
    def vehicle_ids(self):
        return sorted(self.vehicles)

    def slot_times(self):
        return slot_times(self.t_start, self.duration, self.slot_period)

    @cached_property
    def _times(self):
        return {vid: [point.time for point in points] for vid, points in self.vehicles.items()}

    def lifetime(self, vehicle_id):
        times = self._times[vehicle_id]
        return times[0], times[-1]

    def state_at(self, vehicle_id, time) -> TrajectoryPoint | None:
        """Состояние ТС в момент time (линейная интерполяция), None вне его траектории"""
        points = self.vehicles.get(vehicle_id)
        if not points:
            return None
        times = self._times[vehicle_id]
        if time < times[0] - TIME_EPS or time > times[-1] + TIME_EPS:
            return None

        index = max(bisect_right(times, time + TIME_EPS) - 1, 0)
        current = points[index]
        if abs(current.time - time) <= TIME_EPS or index == len(points) - 1:
            return current

        following = points[index + 1]
        share = (time - current.time) / (following.time - current.time)
        (vx0, vy0), (vx1, vy1) = current.velocity, following.velocity
        vx, vy = vx0 + share * (vx1 - vx0), vy0 + share * (vy1 - vy0)
        return replace(
            current,
            time=time,
            x=current.x + share * (following.x - current.x),
            y=current.y + share * (following.y - current.y),
            speed=math.hypot(vx, vy),
            heading=math.atan2(vy, vx),
            velocity_x=vx,
            velocity_y=vy,
        )


@dataclass(frozen=True)
class ScenarioStats:
    vehicle_count: int
    avg_speed: float
    avg_accel: float

    def as_dict(self):
        return asdict(self)


def extract_scenario(store, fog_location, comm_range, t_start, duration, slot_period) -> Scenario:
    """Окно [t_start, t_start + duration] вокруг узла тумана.

    Остаются только ТС, хотя бы раз попавшие в радиус связи за окно.
    Производные считаются по полной траектории до обрезки.
    """
    if not (comm_range > 0 and duration > 0 and slot_period > 0):
        raise DomainError("Радиус связи, длительность и период слота должны быть положительными")

    t_end = t_start + duration
    vehicles = {}
    for vehicle_id, points in sorted(store.items()):
        if any(point.heading is None for point in points):
            points = derive_kinematics(points)
        window = [point for point in points if t_start - TIME_EPS <= point.time <= t_end + TIME_EPS]
        if any(distance(point.location, fog_location) <= comm_range for point in window):
            vehicles[vehicle_id] = window

    if not vehicles:
        logger.warning(
            "Пустой сценарий: в окне [%s, %s] нет ТС в радиусе %s м", t_start, t_end, comm_range
        )
    return Scenario(
        vehicles=vehicles,
        fog_location=tuple(fog_location),
        comm_range=comm_range,
        t_start=t_start,
        duration=duration,
        slot_period=slot_period,
    )


def scenario_stats(scenario: Scenario) -> ScenarioStats:
    points = [point for points in scenario.vehicles.values() for point in points]
    if not points:
        return ScenarioStats(vehicle_count=0, avg_speed=0.0, avg_accel=0.0)

    speeds = np.array([point.speed or 0.0 for point in points])
    accels = np.array([point.accel_magnitude for point in points])
    return ScenarioStats(
        vehicle_count=len(scenario.vehicles),
        avg_speed=float(speeds.mean() * 3.6),
        avg_accel=float(accels.mean()),
    )
