"""Дискретная симуляция одного прогона.

Слоты e_k = t_start + k/ξ. В каждом слоте ТС отправляют статус в момент
e_k + phase + jitter, пакеты идут через канал, пакеты с прибытием в (e_{k-1}, e_k]
образуют M_{e_k}, затем выполняется шаг выбранного алгоритма. После
последнего слота предсказанные конфликты склеиваются в эпизоды так же, как
эталонные, и сравниваются с ними.
"""

import heapq
import logging
import time
from collections import defaultdict, deque
from dataclasses import asdict, dataclass

import numpy as np

from channel.packets import Outcome, StatusPacket
from channel.transmission import Channel
from core.exceptions import ConfigError
from fog.algorithms import step
from fog.state import FogState, PacketRecord
from fog.warnings import WarningSet
from metrics.matching import MatchResult, Score, match_warnings, score
from metrics.slots import SlotCounts, slot_counts
from trajectory.conflicts import expected_conflicts
from trajectory.events import CollisionEvent, merge_episodes
from trajectory.scenario import Scenario, ScenarioStats, scenario_stats

from .config import RunConfig

logger = logging.getLogger(__name__)

TIME_EPS = 1e-9


@dataclass(frozen=True)
class PacketCounts:
    sent: int
    delivered: int
    lost: int
    out_of_range: int
    late_discarded: int
    loss_declarations: int
    recovered: int

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class RunReport:
    config: dict
    stats: ScenarioStats
    warning_sets: tuple[WarningSet, ...]
    expected: tuple[CollisionEvent, ...]
    predicted: tuple[CollisionEvent, ...]
    match: MatchResult
    score: Score
    slot_counts: SlotCounts
    packets: PacketCounts
    wall_time: float

    def as_dict(self):
        """Содержимое отчёта без времени выполнения"""
        return {
            "config": self.config,
            "stats": self.stats.as_dict(),
            "match": self.match.as_dict(),
            "score": self.score.as_dict(),
            "slot_counts": self.slot_counts.as_dict(),
            "packets": self.packets.as_dict(),
            "expected": [event.as_dict() for event in self.expected],
            "predicted": [event.as_dict() for event in self.predicted],
            "flagged_slots": sum(1 for warnings in self.warning_sets if warnings.flagged),
        }


class LossLedger:
    """Потерянные каналом пакеты по ТС; каждый засчитывается восстановленным не более одного раза"""

    def __init__(self):
        self._pending = defaultdict(deque)
        self.recovered = 0

    def lost(self, packet: StatusPacket):
        self._pending[packet.vehicle_id].append(packet.sensed_time)

    def declared(self, record: PacketRecord, slot_time):
        pending = self._pending[record.vehicle_id]
        while pending and pending[0] <= record.packet.sensed_time:
            pending.popleft()
        if pending and pending[0] <= slot_time + TIME_EPS:
            pending.popleft()
            self.recovered += 1


def run(config: RunConfig, scenario: Scenario | None = None) -> RunReport:
    started = time.perf_counter()
    scenario = scenario or config.scenario.load()
    if not scenario.vehicles:
        logger.warning("Сценарий %s пуст: оценки будут вырожденными", config.scenario.name)

    if not 0.0 <= config.emission_phase < scenario.slot_period:
        raise ConfigError(
            f"Фаза отправки {config.emission_phase} должна лежать в [0, {scenario.slot_period})"
        )

    # задержки из отдельного потока: при одном сиде они не зависят от доли потерь
    channel_seed, fog_seed, jitter_seed, latency_seed = np.random.SeedSequence(config.seed).spawn(4)
    channel_config = config.channel_for(scenario.comm_range)
    channel = Channel(
        channel_config, np.random.default_rng(channel_seed), np.random.default_rng(latency_seed)
    )
    fog_rng = np.random.default_rng(fog_seed)
    jitter_rng = np.random.default_rng(jitter_seed)

    thresholds = config.fog_thresholds(scenario)
    state = FogState(
        scenario.fog_location,
        thresholds,
        channel_config.latency.estimator_params(),
        config.estimator,
    )

    pending: list[tuple[float, int, PacketRecord]] = []
    ledger = LossLedger()
    late_discarded = loss_declarations = sequence = 0
    warning_sets = []
    end_time = scenario.end_time
    vehicle_ids = scenario.vehicle_ids

    for slot_time in scenario.slot_times():
        for vehicle_id in vehicle_ids:
            jitter = jitter_rng.uniform(0.0, config.emission_jitter) if config.emission_jitter > 0 else 0.0
            sensed_time = slot_time + config.emission_phase + jitter
            point = scenario.state_at(vehicle_id, sensed_time)
            if point is None:
                continue

            packet = StatusPacket.from_point(point, sensed_time)
            delivery = channel.send(packet, scenario.fog_location)
            if delivery.outcome is Outcome.LOST:
                ledger.lost(packet)
            elif delivery.delivered:
                if delivery.arrival_time > end_time + TIME_EPS:
                    late_discarded += 1
                    continue
                sequence += 1
                heapq.heappush(
                    pending, (delivery.arrival_time, sequence, PacketRecord(packet, delivery.arrival_time))
                )

        received = []
        while pending and pending[0][0] <= slot_time + TIME_EPS:
            received.append(heapq.heappop(pending)[2])

        warnings = step(state, received, slot_time, config.algorithm, fog_rng)
        warning_sets.append(warnings)
        for record in state.recovered:
            loss_declarations += 1
            ledger.declared(record, slot_time)
        if warnings.flagged:
            logger.debug("Слот %s: предупреждения для %s", slot_time, warnings.flagged)

    true_conflicts = expected_conflicts(scenario, config.d_col, config.headway)
    expected = merge_episodes(true_conflicts, scenario.slot_period)
    predicted = merge_episodes(
        [
            event
            for warnings in warning_sets
            for event in warnings.pair_events
            if event.span[1] <= end_time + TIME_EPS
        ],
        scenario.slot_period,
    )
    match = match_warnings(expected, predicted, config.tolerance)

    counts = channel.counts
    packets = PacketCounts(
        sent=channel.sent,
        delivered=counts[Outcome.DELIVERED],
        lost=counts[Outcome.LOST],
        out_of_range=counts[Outcome.OUT_OF_RANGE],
        late_discarded=late_discarded,
        loss_declarations=loss_declarations,
        recovered=ledger.recovered,
    )
    report = RunReport(
        config=config.as_dict(),
        stats=scenario_stats(scenario),
        warning_sets=tuple(warning_sets),
        expected=tuple(expected),
        predicted=tuple(predicted),
        match=match,
        score=score(match),
        slot_counts=slot_counts(warning_sets, true_conflicts, config.predict_horizon),
        packets=packets,
        wall_time=time.perf_counter() - started,
    )
    logger.info(
        "Прогон %s (%s): точность %.3f, полнота %.3f",
        config.name,
        config.algorithm.value,
        report.score.precision,
        report.score.recall,
    )
    return report
