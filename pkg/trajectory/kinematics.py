import logging

from core.exceptions import TrajectoryDataError

from .points import TrajectoryPoint

logger = logging.getLogger(__name__)


def derive_kinematics(points: list[TrajectoryPoint]) -> list[TrajectoryPoint]:
    """Скорость, курс и ускорение по прямым конечным разностям.

    Последняя точка копирует производные предпоследней; ускорение, для
    которого не хватает второй разности, копируется с последнего
    вычисленного значения.
    """
    if not points:
        return []
    if len(points) == 1:
        logger.warning(
            "ТС %s: одна точка траектории, производные приняты нулевыми", points[0].vehicle_id
        )
        return [points[0].with_kinematics(0.0, 0.0, 0.0, 0.0)]

    for previous, current in zip(points, points[1:]):
        if current.time <= previous.time:
            raise TrajectoryDataError(
                f"ТС {current.vehicle_id}: время должно строго возрастать ({previous.time} -> {current.time})"
            )

    velocities = []
    for current, following in zip(points, points[1:]):
        dt = following.time - current.time
        velocities.append(((following.x - current.x) / dt, (following.y - current.y) / dt))
    velocities.append(velocities[-1])

    accelerations = []
    for index in range(len(points) - 2):
        dt = points[index + 1].time - points[index].time
        (vx0, vy0), (vx1, vy1) = velocities[index], velocities[index + 1]
        accelerations.append(((vx1 - vx0) / dt, (vy1 - vy0) / dt))
    if not accelerations:
        accelerations.append((0.0, 0.0))
    while len(accelerations) < len(points):
        accelerations.append(accelerations[-1])

    return [
        point.with_kinematics(vx, vy, ax, ay)
        for point, (vx, vy), (ax, ay) in zip(points, velocities, accelerations)
    ]
