"""Калибровка и прогноз траекторий.

Пакет несёт кинематику на момент измерения; узел принимает его в момент
e_r. К моменту слота e_k с момента измерения прошло

    e_ts = (e_k − e_r) + e_t,

где e_t это оценка задержки. Калиброванная позиция l + e_ts·s + ½·e_ts²·a,
прогноз продолжает равноускоренное движение из калиброванного состояния.
"""

import math
from dataclasses import dataclass

import numpy as np

from channel.packets import StatusPacket
from core.exceptions import DomainError
from stable.distribution import sample_nonnegative
from trajectory.conflicts import Track, make_track

from .state import FogState, LatencyEstimator

TIME_EPS = 1e-9


@dataclass(frozen=True)
class PredictedTrajectory:
    vehicle_id: str
    points: tuple[tuple[float, float, float], ...]

    def track(self) -> Track:
        return make_track(
            [time for time, _, _ in self.points], [(x, y) for _, x, y in self.points]
        )


def elapsed_since_sensing(receive_time, slot_time, latency_ms):
    """e_ts в секундах"""
    if latency_ms < 0:
        raise DomainError(f"Отрицательная оценка задержки: {latency_ms}")
    if slot_time < receive_time - TIME_EPS:
        raise DomainError(f"Слот {slot_time} раньше приёма пакета {receive_time}")
    return (slot_time - receive_time) + latency_ms / 1000.0


def calibrate(packet: StatusPacket, receive_time, slot_time, latency_estimate_ms):
    elapsed = elapsed_since_sensing(receive_time, slot_time, latency_estimate_ms)
    (x, y), (vx, vy), (ax, ay) = packet.location, packet.velocity, packet.acceleration
    return (
        x + elapsed * vx + 0.5 * elapsed**2 * ax,
        y + elapsed * vy + 0.5 * elapsed**2 * ay,
    )


def estimate_latency(state: FogState, rng: np.random.Generator) -> float:
    """Оценка задержки, мс: случайное значение из модели или её параметр положения"""
    if state.estimator is LatencyEstimator.MEAN:
        return max(state.latency_params.mu, 0.0)
    return sample_nonnegative(state.latency_params, rng)


def predict_trajectory(
    packet: StatusPacket, calibrated_location, slot_time, state: FogState, elapsed=0.0
) -> PredictedTrajectory:
    """Точки e_k + j/ξ, j = 1..⌈e_pre·ξ⌉; скорость берётся на момент калибровки"""
    step = state.thresholds.slot_period
    count = math.ceil(state.thresholds.predict_horizon / step - TIME_EPS)
    (x, y), (ax, ay) = calibrated_location, packet.acceleration
    vx = packet.velocity[0] + elapsed * ax
    vy = packet.velocity[1] + elapsed * ay

    points = []
    for j in range(1, count + 1):
        ahead = j * step
        points.append(
            (
                slot_time + ahead,
                x + ahead * vx + 0.5 * ahead**2 * ax,
                y + ahead * vy + 0.5 * ahead**2 * ay,
            )
        )
    return PredictedTrajectory(packet.vehicle_id, tuple(points))
