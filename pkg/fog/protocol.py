"""Протокол Record/Detection: учёт отправителей и обнаружение потерь пакетов."""

import logging

from core.geometry import distance

from .state import FogState, PacketRecord

logger = logging.getLogger(__name__)


def as_records(received) -> list[PacketRecord]:
    return [
        item if isinstance(item, PacketRecord) else PacketRecord(packet=item[0], receive_time=item[1])
        for item in received
    ]


def latest_per_vehicle(received) -> dict[str, PacketRecord]:
    """Один пакет на ТС: побеждает более позднее время измерения"""
    chosen: dict[str, PacketRecord] = {}
    for record in as_records(received):
        current = chosen.get(record.vehicle_id)
        if current is None or (record.packet.sensed_time, record.receive_time) > (
            current.packet.sensed_time,
            current.receive_time,
        ):
            chosen[record.vehicle_id] = record
    return chosen


def record_step(state: FogState, received, slot_time) -> frozenset[str]:
    """Record: отправители слота попадают в ID_M, новые ТС добавляются в множество ID"""
    state.begin_slot(slot_time)
    state.current_received = latest_per_vehicle(received)
    state.slot_ids = frozenset(state.current_received)

    newcomers = state.slot_ids - state.id_set
    if newcomers:
        logger.debug("Слот %s: новые ТС %s", slot_time, sorted(newcomers))
    state.id_set |= state.slot_ids
    return state.slot_ids


def detect_losses(state: FogState, slot_time) -> list[PacketRecord]:
    """Detection: для ТС без пакета в слоте решает, уехало ли оно или пакет потерян.

    Уехавшие ТС (последняя позиция не ближе R − τ к границе) удаляются из
    множества ID; при потере в текущий слот подставляется последний
    архивный пакет.
    """
    thresholds = state.thresholds
    boundary = thresholds.comm_range - thresholds.tau
    recovered = []

    for vehicle_id in sorted(state.id_set - state.slot_ids):
        record = state.latest(vehicle_id)
        if distance(record.packet.location, state.fog_location) >= boundary:
            state.id_set.discard(vehicle_id)
            logger.debug("Слот %s: ТС %s покидает зону связи", slot_time, vehicle_id)
        elif slot_time - record.receive_time > thresholds.loss_timeout:
            injected = PacketRecord(record.packet, record.receive_time, recovered=True)
            state.current_received[vehicle_id] = injected
            recovered.append(injected)
            logger.debug("Слот %s: пакет ТС %s считается потерянным", slot_time, vehicle_id)

    state.recovered = recovered
    return recovered


def close_slot(state: FogState):
    """Архивирует только реально принятые пакеты слота"""
    received = {
        vehicle_id: record
        for vehicle_id, record in state.current_received.items()
        if not record.recovered
    }
    state.archive(state.slot_time, received)
