import csv
import io

WARNING_LOG_HEADER = ["slot_time", "vehicle_id", "other_vehicle", "meet_x", "meet_y", "headway"]


def warning_rows(warning_sets):
    """Одна строка на отмеченное ТС в слоте; причина: конфликт с наименьшим интервалом"""
    for warnings in warning_sets:
        for vehicle_id in warnings.flagged:
            event = min(
                warnings.events_for(vehicle_id), key=lambda e: (e.headway, e.conflict_time, e.key)
            )
            other = event.pair[1] if event.pair[0] == vehicle_id else event.pair[0]
            yield [
                repr(warnings.slot_time),
                vehicle_id,
                other,
                repr(event.location[0]),
                repr(event.location[1]),
                repr(event.headway),
            ]


def warning_log_csv(warning_sets) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(WARNING_LOG_HEADER)
    writer.writerows(warning_rows(warning_sets))
    return buffer.getvalue()
