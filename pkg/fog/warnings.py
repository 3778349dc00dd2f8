from dataclasses import dataclass

from trajectory.conflicts import find_conflicts
from trajectory.events import CollisionEvent


@dataclass(frozen=True)
class WarningSet:
    """Предупреждения слота: флаг w для каждого ТС с прогнозом и конфликты, которые их вызвали"""

    slot_time: float | None
    flags: dict[str, int]
    pair_events: tuple[CollisionEvent, ...]

    @property
    def flagged(self):
        return sorted(vid for vid, flag in self.flags.items() if flag)

    def events_for(self, vehicle_id):
        return [event for event in self.pair_events if vehicle_id in event.pair]


def empty_warning_set(slot_time=None) -> WarningSet:
    return WarningSet(slot_time, {}, ())


def detect_collisions(trajectories, d_col, headway_threshold, slot_time=None) -> WarningSet:
    tracks = {trajectory.vehicle_id: trajectory.track() for trajectory in trajectories}
    events = find_conflicts(tracks, d_col, headway_threshold)

    flags = {vehicle_id: 0 for vehicle_id in sorted(tracks)}
    for event in events:
        for vehicle_id in event.pair:
            flags[vehicle_id] = 1
    return WarningSet(slot_time=slot_time, flags=flags, pair_events=tuple(events))
