from dataclasses import dataclass
from itertools import groupby

from core.exceptions import DomainError
from core.geometry import Point, midpoint

TIME_EPS = 1e-9


@dataclass(frozen=True)
class CollisionEvent:
    """Потенциальный конфликт пары ТС в общей точке.

    point_time_a и point_time_b относятся к pair[0] и pair[1]; span задаёт
    интервал времени события (для эпизода он охватывает все его конфликты).
    """

    pair: tuple[str, str]
    point_time_a: float
    point_time_b: float
    location: Point
    headway: float
    span: tuple[float, float]

    def __post_init__(self):
        if self.pair[0] == self.pair[1]:
            raise DomainError(f"Пара конфликта из одного ТС: {self.pair[0]}")
        if self.headway < 0:
            raise DomainError(f"Отрицательный интервал: {self.headway}")

    @classmethod
    def between(cls, vehicle_a, time_a, location_a, vehicle_b, time_b, location_b):
        if vehicle_b < vehicle_a:
            vehicle_a, vehicle_b = vehicle_b, vehicle_a
            time_a, time_b = time_b, time_a
        return cls(
            pair=(vehicle_a, vehicle_b),
            point_time_a=time_a,
            point_time_b=time_b,
            location=midpoint(location_a, location_b),
            headway=abs(time_a - time_b),
            span=(min(time_a, time_b), max(time_a, time_b)),
        )

    @property
    def key(self):
        return (self.pair, self.point_time_a, self.point_time_b)

    @property
    def conflict_time(self):
        return min(self.point_time_a, self.point_time_b)

    def as_dict(self):
        return {
            "pair": list(self.pair),
            "point_time_a": self.point_time_a,
            "point_time_b": self.point_time_b,
            "location": list(self.location),
            "headway": self.headway,
            "span": list(self.span),
        }


def unique_events(events):
    """Убирает повторы одного конфликта (пара и моменты прохождения точки)"""
    seen = {}
    for event in events:
        seen.setdefault(event.key, event)
    return [seen[key] for key in sorted(seen)]


def merge_episodes(events, slot_period) -> list[CollisionEvent]:
    """Склеивает конфликты пары в эпизоды: соседние конфликты не дальше одного слота.

    Эпизод представлен конфликтом с наименьшим интервалом.
    """
    ordered = sorted(unique_events(events), key=lambda e: (e.pair, e.conflict_time, e.key))
    episodes = []
    for _pair, pair_events in groupby(ordered, key=lambda e: e.pair):
        group = []
        for event in pair_events:
            if group and event.conflict_time - group[-1].conflict_time > slot_period + TIME_EPS:
                episodes.append(_episode(group))
                group = []
            group.append(event)
        episodes.append(_episode(group))
    return sorted(episodes, key=lambda e: (e.span, e.pair))


def _episode(group):
    head = min(group, key=lambda e: (e.headway, e.conflict_time, e.key))
    return CollisionEvent(
        pair=head.pair,
        point_time_a=head.point_time_a,
        point_time_b=head.point_time_b,
        location=head.location,
        headway=head.headway,
        span=(min(e.span[0] for e in group), max(e.span[1] for e in group)),
    )
