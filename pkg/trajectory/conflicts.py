"""Проверка конфликтов по точкам траекторий.

Две точки разных ТС считаются одной точкой дороги, если расстояние между
ними меньше d_col; конфликт фиксируется, если интервал между моментами
прохождения меньше порога ι. Одна и та же проверка используется и для
эталонного набора W_d, и на узле тумана.
"""

from itertools import combinations
from typing import NamedTuple

import numpy as np
from scipy.spatial.distance import cdist

from core.exceptions import DomainError

from .events import CollisionEvent, merge_episodes
from .scenario import Scenario


class Track(NamedTuple):
    times: np.ndarray
    xy: np.ndarray


def make_track(times, locations) -> Track:
    return Track(
        np.asarray(times, dtype=float).reshape(-1),
        np.asarray(locations, dtype=float).reshape(-1, 2),
    )


def _check_thresholds(d_col, headway_threshold):
    if not d_col > 0:
        raise DomainError(f"d_col должен быть положительным: {d_col}")
    if not headway_threshold > 0:
        raise DomainError(f"Порог интервала должен быть положительным: {headway_threshold}")


def find_conflicts(tracks: dict[str, Track], d_col, headway_threshold) -> list[CollisionEvent]:
    """Все конфликтующие пары точек для набора траекторий (по одной на пару точек)"""
    _check_thresholds(d_col, headway_threshold)
    vehicle_ids = sorted(vid for vid, track in tracks.items() if len(track.times))
    if len(vehicle_ids) < 2:
        return []

    owners = np.concatenate(
        [np.full(len(tracks[vid].times), index) for index, vid in enumerate(vehicle_ids)]
    )
    times = np.concatenate([tracks[vid].times for vid in vehicle_ids])
    xy = np.concatenate([tracks[vid].xy for vid in vehicle_ids])

    hits = (
        (cdist(xy, xy) < d_col)
        & (np.abs(times[:, None] - times[None, :]) < headway_threshold)
        & (owners[:, None] < owners[None, :])
    )
    return [
        CollisionEvent.between(
            vehicle_ids[owners[i]], float(times[i]), (float(xy[i, 0]), float(xy[i, 1])),
            vehicle_ids[owners[j]], float(times[j]), (float(xy[j, 0]), float(xy[j, 1])),
        )
        for i, j in zip(*np.nonzero(hits))
    ]


def resampled_tracks(scenario: Scenario) -> dict[str, Track]:
    """Истинные траектории на сетке слотов сценария"""
    tracks = {}
    grid = scenario.slot_times()
    for vehicle_id in scenario.vehicle_ids:
        states = [
            state
            for state in (scenario.state_at(vehicle_id, time) for time in grid)
            if state is not None
        ]
        tracks[vehicle_id] = make_track(
            [state.time for state in states], [state.location for state in states]
        )
    return tracks


def expected_conflicts(scenario: Scenario, d_col, headway_threshold) -> list[CollisionEvent]:
    """Конфликты истинных траекторий без склейки (полный перебор по парам ТС)"""
    _check_thresholds(d_col, headway_threshold)
    tracks = resampled_tracks(scenario)
    events = []
    for vid_a, vid_b in combinations(sorted(tracks), 2):
        events.extend(find_conflicts({vid_a: tracks[vid_a], vid_b: tracks[vid_b]}, d_col, headway_threshold))
    return events


def expected_warnings(scenario: Scenario, d_col, headway_threshold) -> list[CollisionEvent]:
    """Эталонный набор предупреждений W_d: эпизоды конфликтов истинных траекторий"""
    return merge_episodes(
        expected_conflicts(scenario, d_col, headway_threshold), scenario.slot_period
    )
