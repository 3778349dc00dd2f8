import math
from dataclasses import dataclass, replace

from core.exceptions import DomainError


@dataclass(frozen=True)
class TrajectoryPoint:
    """Точка траектории ТС: позиция, скорость, курс и ускорение в момент time"""

    time: float
    vehicle_id: str
    x: float
    y: float
    speed: float | None = None
    heading: float | None = None
    accel_x: float = 0.0
    accel_y: float = 0.0
    # компоненты скорости без потерь на cos/sin курса
    velocity_x: float | None = None
    velocity_y: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.time) and self.time >= 0.0):
            raise DomainError(f"Некорректное время точки: {self.time}")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"Некорректные координаты точки: ({self.x}, {self.y})")

    @property
    def location(self):
        return (self.x, self.y)

    @property
    def velocity(self):
        if self.velocity_x is not None and self.velocity_y is not None:
            return (self.velocity_x, self.velocity_y)
        speed = self.speed or 0.0
        heading = self.heading or 0.0
        return (speed * math.cos(heading), speed * math.sin(heading))

    @property
    def acceleration(self):
        return (self.accel_x, self.accel_y)

    @property
    def accel_magnitude(self):
        return math.hypot(self.accel_x, self.accel_y)

    def with_kinematics(self, vx, vy, ax, ay):
        return replace(
            self,
            speed=math.hypot(vx, vy),
            heading=math.atan2(vy, vx),
            accel_x=ax,
            accel_y=ay,
            velocity_x=vx,
            velocity_y=vy,
        )
