from dataclasses import dataclass

from .matching import MatchResult, Score, score

TIME_EPS = 1e-9


@dataclass(frozen=True)
class SlotCounts:
    """Сравнение по слотам: отмеченные ТС против ТС с истинным конфликтом в горизонте прогноза"""

    true_positives: int
    false_positives: int
    false_negatives: int

    def score(self) -> Score:
        return score(MatchResult(self.true_positives, self.false_positives, self.false_negatives))

    def as_dict(self):
        return {
            "tp": self.true_positives,
            "fp": self.false_positives,
            "fn": self.false_negatives,
            **self.score().as_dict(),
        }


def expected_vehicles(conflicts, slot_time, horizon) -> set[str]:
    return {
        vehicle_id
        for event in conflicts
        if slot_time + TIME_EPS < event.conflict_time <= slot_time + horizon + TIME_EPS
        for vehicle_id in event.pair
    }


def slot_counts(warning_sets, expected_conflicts, horizon) -> SlotCounts:
    tp = fp = fn = 0
    for warnings in warning_sets:
        predicted = set(warnings.flagged)
        expected = expected_vehicles(expected_conflicts, warnings.slot_time, horizon)
        tp += len(predicted & expected)
        fp += len(predicted - expected)
        fn += len(expected - predicted)
    return SlotCounts(tp, fp, fn)
