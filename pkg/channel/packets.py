import enum
import math
from dataclasses import dataclass

from core.exceptions import DomainError
from core.geometry import Point


@dataclass(frozen=True)
class StatusPacket:
    """Статусное сообщение ТС: координаты, скорость, ускорение, курс и момент измерения"""

    vehicle_id: str
    sensed_time: float
    location: Point
    velocity: Point
    acceleration: Point
    heading: float

    def __post_init__(self):
        values = (self.sensed_time, self.heading, *self.location, *self.velocity, *self.acceleration)
        if not all(math.isfinite(value) for value in values):
            raise DomainError(f"Нечисловые поля в пакете ТС {self.vehicle_id}")
        if self.sensed_time < 0:
            raise DomainError(f"Отрицательное время измерения: {self.sensed_time}")

    @classmethod
    def from_point(cls, point, sensed_time=None):
        return cls(
            vehicle_id=point.vehicle_id,
            sensed_time=point.time if sensed_time is None else sensed_time,
            location=point.location,
            velocity=point.velocity,
            acceleration=point.acceleration,
            heading=point.heading or 0.0,
        )


class Outcome(enum.Enum):
    DELIVERED = "delivered"
    LOST = "lost"
    OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class Delivery:
    packet: StatusPacket
    outcome: Outcome
    arrival_time: float | None = None
    latency: float | None = None

    def __post_init__(self):
        if self.outcome is Outcome.DELIVERED:
            if self.latency is None or self.latency < 0:
                raise DomainError(f"Доставленный пакет без корректной задержки: {self.latency}")
            if not math.isclose(
                self.arrival_time, self.packet.sensed_time + self.latency / 1000, abs_tol=1e-9
            ):
                raise DomainError("Время прибытия не согласовано с задержкой")

    @property
    def delivered(self):
        return self.outcome is Outcome.DELIVERED

    @classmethod
    def lost(cls, packet):
        return cls(packet, Outcome.LOST)

    @classmethod
    def out_of_range(cls, packet):
        return cls(packet, Outcome.OUT_OF_RANGE)

    @classmethod
    def arrived(cls, packet, latency):
        return cls(packet, Outcome.DELIVERED, packet.sensed_time + latency / 1000, latency)
