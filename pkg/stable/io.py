import math
from pathlib import Path

from core.exceptions import TrajectoryParseError
from core.files import atomic_write_text


def parse_latency_trace(lines) -> list[float]:
    """Трасса задержек: одно неотрицательное число (мс) на строку"""
    values = []
    for line_number, raw in enumerate(lines, start=1):
        row = raw.strip()
        if not row or row.startswith("#"):
            continue
        try:
            value = float(row)
        except ValueError:
            raise TrajectoryParseError(line_number, row, "ожидалось число") from None
        if not math.isfinite(value) or value < 0:
            raise TrajectoryParseError(line_number, row, "задержка должна быть неотрицательной")
        values.append(value)
    return values


def read_latency_trace(path) -> list[float]:
    with open(path, encoding="utf-8") as handle:
        return parse_latency_trace(handle)


def write_latency_trace(path, values) -> Path:
    return atomic_write_text(path, "".join(f"{float(value)!r}\n" for value in values))
