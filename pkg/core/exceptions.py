class FogWarnError(Exception):
    """Базовая ошибка симулятора"""


class DomainError(FogWarnError, ValueError):
    """Недопустимые числовые входные данные"""


class DegenerateDataError(DomainError):
    """Данные без разброса или слишком мало точек для регрессии"""


class ConfigError(FogWarnError):
    """Некорректная конфигурация"""


class TrajectoryParseError(FogWarnError):
    """Ошибка разбора строки файла траекторий или трассы задержек"""

    def __init__(self, line_number, row, reason):
        self.line_number = line_number
        self.row = row
        self.reason = reason
        super().__init__(f"Строка {line_number}: {reason} ({row!r})")


class TrajectoryDataError(FogWarnError):
    """Противоречивые данные траектории"""


class ConsistencyError(FogWarnError):
    """Нарушен инвариант состояния узла"""
