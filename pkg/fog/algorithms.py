"""Шаг алгоритма предупреждения для одного слота.

TCCW: Record → Detection → (оценка задержки → калибровка) для каждого ТС →
прогноз → проверка конфликтов. FWC ведёт учёт Record, но не восстанавливает
потерянные пакеты и не калибрует. CBW (облако) работает только с
пришедшими пакетами как есть.
"""

import enum
import logging

from core.exceptions import ConfigError

from .calibration import calibrate, elapsed_since_sensing, estimate_latency, predict_trajectory
from .protocol import close_slot, detect_losses, latest_per_vehicle, record_step
from .state import FogState
from .warnings import WarningSet, detect_collisions

logger = logging.getLogger(__name__)


class Algorithm(enum.Enum):
    CBW = "CBW"
    FWC = "FWC"
    TCCW = "TCCW"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ConfigError(f"Неизвестный алгоритм: {value}") from None


def _collide(state: FogState, trajectories, slot_time) -> WarningSet:
    thresholds = state.thresholds
    return detect_collisions(trajectories, thresholds.d_col, thresholds.headway, slot_time)


def tccw_step(state: FogState, received, slot_time, rng) -> WarningSet:
    record_step(state, received, slot_time)
    detect_losses(state, slot_time)

    trajectories = []
    for vehicle_id in sorted(state.current_received):
        record = state.current_received[vehicle_id]
        latency = estimate_latency(state, rng)
        elapsed = elapsed_since_sensing(record.receive_time, slot_time, latency)
        location = calibrate(record.packet, record.receive_time, slot_time, latency)
        trajectories.append(predict_trajectory(record.packet, location, slot_time, state, elapsed))

    warnings = _collide(state, trajectories, slot_time)
    close_slot(state)
    return warnings


def baseline_step(state: FogState, received, slot_time, mode) -> WarningSet:
    mode = Algorithm.parse(mode)
    if mode is Algorithm.FWC:
        record_step(state, received, slot_time)
        current = state.current_received
    elif mode is Algorithm.CBW:
        current = latest_per_vehicle(received)
    else:
        raise ConfigError(f"Базовый алгоритм должен быть CBW или FWC, получено {mode.value}")

    trajectories = [
        predict_trajectory(record.packet, record.packet.location, slot_time, state)
        for _, record in sorted(current.items())
    ]
    warnings = _collide(state, trajectories, slot_time)
    if mode is Algorithm.FWC:
        close_slot(state)
    return warnings


def step(state: FogState, received, slot_time, algorithm, rng) -> WarningSet:
    algorithm = Algorithm.parse(algorithm)
    if algorithm is Algorithm.TCCW:
        return tccw_step(state, received, slot_time, rng)
    return baseline_step(state, received, slot_time, algorithm)
