import math

Point = tuple[float, float]


def distance(a: Point, b: Point) -> float:
    """Евклидово расстояние между двумя точками"""
    return math.hypot(a[0] - b[0], a[1] - b[1])


def midpoint(a: Point, b: Point) -> Point:
    return ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)


def slot_count(duration: float, slot_period: float) -> int:
    """Число интервалов 1/ξ в окне (с допуском на ошибку округления)"""
    return int(math.floor(duration / slot_period + 1e-9))


def slot_times(t_start: float, duration: float, slot_period: float) -> list[float]:
    """Моменты слотов e_k = t_start + k/ξ, k = 0..N"""
    return [t_start + k * slot_period for k in range(slot_count(duration, slot_period) + 1)]
