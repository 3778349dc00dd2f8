"""Чтение и запись файлов траекторий.

Канонический формат: UTF-8, колонки через пробел
`time_s vehicle_id x_m y_m [speed_mps]`, по одной точке на строку,
строки с `#` игнорируются. Дополнительно поддерживается выгрузка SUMO FCD
(`<timestep time><vehicle id x y speed/></timestep>`).
"""

import enum
import io
import logging
import xml.etree.ElementTree as ET

from core.exceptions import ConfigError, TrajectoryDataError, TrajectoryParseError

from .points import TrajectoryPoint

logger = logging.getLogger(__name__)

TrajectoryStore = dict[str, list[TrajectoryPoint]]


class TrajectoryFormat(enum.Enum):
    CANONICAL = "canonical"
    FCD_XML = "fcd"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ConfigError(f"Неизвестный формат траекторий: {value}") from None


def _text_lines(source):
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8")


def _parse_canonical(source):
    for line_number, raw in enumerate(_text_lines(source), start=1):
        row = raw.strip()
        if not row or row.startswith("#"):
            continue
        columns = row.split()
        if len(columns) not in (4, 5):
            raise TrajectoryParseError(line_number, row, "ожидалось 4 или 5 колонок")
        time_raw, vehicle_id, x_raw, y_raw, *rest = columns
        try:
            time, x, y = float(time_raw), float(x_raw), float(y_raw)
            speed = float(rest[0]) if rest else None
        except ValueError:
            raise TrajectoryParseError(line_number, row, "нечисловое значение") from None
        try:
            yield TrajectoryPoint(time=time, vehicle_id=vehicle_id, x=x, y=y, speed=speed)
        except ValueError as exc:
            raise TrajectoryParseError(line_number, row, str(exc)) from None


def _parse_fcd(source):
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, str):
        data = data.encode("utf-8")
    if not data.strip():
        return
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line_number = exc.position[0] if exc.position else 0
        raise TrajectoryParseError(line_number, "", f"некорректный XML: {exc}") from None

    for index, timestep in enumerate(root.iter("timestep"), start=1):
        for vehicle in timestep.iter("vehicle"):
            row = ET.tostring(vehicle, encoding="unicode").strip()
            try:
                speed = vehicle.get("speed")
                yield TrajectoryPoint(
                    time=float(timestep.get("time")),
                    vehicle_id=vehicle.get("id"),
                    x=float(vehicle.get("x")),
                    y=float(vehicle.get("y")),
                    speed=float(speed) if speed is not None else None,
                )
            except (TypeError, ValueError) as exc:
                raise TrajectoryParseError(index, row, f"некорректная запись ТС: {exc}") from None


def load_trajectories(source, fmt=TrajectoryFormat.CANONICAL) -> TrajectoryStore:
    """Точки, сгруппированные по ТС и упорядоченные по времени"""
    fmt = TrajectoryFormat.parse(fmt)
    parser = _parse_canonical if fmt is TrajectoryFormat.CANONICAL else _parse_fcd

    by_vehicle: dict[str, dict[float, TrajectoryPoint]] = {}
    for point in parser(source):
        points = by_vehicle.setdefault(point.vehicle_id, {})
        existing = points.get(point.time)
        if existing is None:
            points[point.time] = point
        elif existing != point:
            raise TrajectoryDataError(
                f"ТС {point.vehicle_id}: две разные точки в момент {point.time}"
            )

    store = {
        vehicle_id: [points[time] for time in sorted(points)]
        for vehicle_id, points in sorted(by_vehicle.items())
    }
    logger.debug("Загружено ТС: %d", len(store))
    return store


def read_trajectories(path, fmt=TrajectoryFormat.CANONICAL) -> TrajectoryStore:
    with open(path, "rb") as handle:
        return load_trajectories(handle, fmt)


def serialize_trajectories(store: TrajectoryStore) -> str:
    lines = ["# time_s vehicle_id x_m y_m speed_mps\n"]
    rows = sorted(
        (point for points in store.values() for point in points),
        key=lambda point: (point.time, point.vehicle_id),
    )
    for point in rows:
        columns = [repr(point.time), point.vehicle_id, repr(point.x), repr(point.y)]
        if point.speed is not None:
            columns.append(repr(point.speed))
        lines.append(" ".join(columns) + "\n")
    return "".join(lines)
