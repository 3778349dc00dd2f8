"""Сопоставление предсказанных предупреждений с эталонными, точность и полнота."""

from dataclasses import dataclass

from core.exceptions import DomainError
from trajectory.events import CollisionEvent


@dataclass(frozen=True)
class MatchResult:
    true_positives: int
    false_positives: int
    false_negatives: int
    matched_pairs: tuple[tuple[CollisionEvent, CollisionEvent], ...] = ()

    def as_dict(self):
        return {
            "tp": self.true_positives,
            "fp": self.false_positives,
            "fn": self.false_negatives,
        }


@dataclass(frozen=True)
class Score:
    precision: float
    recall: float

    def as_dict(self):
        return {"precision": self.precision, "recall": self.recall}


def interval_gap(a: CollisionEvent, b: CollisionEvent) -> float:
    """Зазор между интервалами событий (0, если интервалы пересекаются)"""
    return max(0.0, b.span[0] - a.span[1], a.span[0] - b.span[1])


def _ordered(events):
    return sorted(events, key=lambda e: (e.span, e.pair, e.key))


def match_warnings(expected, predicted, time_tolerance) -> MatchResult:
    """Взаимно однозначное сопоставление по паре ТС, жадно по наименьшему зазору"""
    if time_tolerance < 0:
        raise DomainError(f"Допуск по времени не может быть отрицательным: {time_tolerance}")
    expected, predicted = _ordered(expected), _ordered(predicted)

    candidates = sorted(
        (interval_gap(e, p), i, j)
        for i, e in enumerate(expected)
        for j, p in enumerate(predicted)
        if e.pair == p.pair and interval_gap(e, p) <= time_tolerance
    )
    used_expected, used_predicted, matched = set(), set(), []
    for _gap, i, j in candidates:
        if i in used_expected or j in used_predicted:
            continue
        used_expected.add(i)
        used_predicted.add(j)
        matched.append((expected[i], predicted[j]))

    return MatchResult(
        true_positives=len(matched),
        false_positives=len(predicted) - len(matched),
        false_negatives=len(expected) - len(matched),
        matched_pairs=tuple(matched),
    )


def score(m: MatchResult) -> Score:
    """Точность tp/(tp+fp) и полнота tp/(tp+fn).

    Пустой знаменатель даёт 1, если второе множество тоже пусто, иначе 0.
    """
    tp, fp, fn = m.true_positives, m.false_positives, m.false_negatives
    precision = tp / (tp + fp) if tp + fp else (1.0 if fn == 0 else 0.0)
    recall = tp / (tp + fn) if tp + fn else (1.0 if fp == 0 else 0.0)
    return Score(precision=precision, recall=recall)
