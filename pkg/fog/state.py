import enum
import logging
import math
from collections import deque
from dataclasses import dataclass

from channel.packets import StatusPacket
from core.exceptions import ConfigError, ConsistencyError
from stable.params import StableParams

logger = logging.getLogger(__name__)

# запас истории сверх 1/ξ + γ, секунд
HISTORY_MARGIN = 5.0


@dataclass(frozen=True)
class PacketRecord:
    """Принятый пакет и момент его приёма узлом (recovered: подставлен из истории)"""

    packet: StatusPacket
    receive_time: float
    recovered: bool = False

    @property
    def vehicle_id(self):
        return self.packet.vehicle_id


@dataclass(frozen=True)
class FogThresholds:
    tau: float = 10.0
    gamma: float = 0.2
    headway: float = 3.0
    d_col: float = 2.0
    predict_horizon: float = 5.0
    slot_period: float = 1.0
    comm_range: float = 500.0

    def __post_init__(self):
        if self.tau < 0 or self.gamma < 0:
            raise ConfigError(f"Пороги τ и γ не могут быть отрицательными: {self.tau}, {self.gamma}")
        for name in ("headway", "d_col", "predict_horizon", "slot_period", "comm_range"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"Порог {name} должен быть положительным: {getattr(self, name)}")

    @property
    def loss_timeout(self):
        """Через сколько секунд после последнего приёма пакет считается потерянным"""
        return self.slot_period + self.gamma

    @property
    def history_slots(self):
        return math.ceil((self.slot_period + self.gamma + HISTORY_MARGIN) / self.slot_period)

    def as_dict(self):
        return {
            "tau": self.tau,
            "gamma": self.gamma,
            "headway": self.headway,
            "d_col": self.d_col,
            "predict_horizon": self.predict_horizon,
            "slot_period": self.slot_period,
            "comm_range": self.comm_range,
        }


class LatencyEstimator(enum.Enum):
    RANDOM = "random"
    MEAN = "mean"


class FogState:
    """Состояние узла тумана: множество ID, история пакетов и пакеты текущего слота"""

    def __init__(
        self,
        fog_location,
        thresholds: FogThresholds,
        latency_params: StableParams,
        estimator: LatencyEstimator = LatencyEstimator.RANDOM,
    ):
        self.fog_location = tuple(fog_location)
        self.thresholds = thresholds
        self.latency_params = latency_params
        self.estimator = LatencyEstimator(estimator)
        self.id_set: set[str] = set()
        self.history: deque[tuple[float, dict[str, PacketRecord]]] = deque(
            maxlen=thresholds.history_slots
        )
        self._latest: dict[str, PacketRecord] = {}
        self.slot_time: float | None = None
        self.slot_ids: frozenset[str] = frozenset()
        self.current_received: dict[str, PacketRecord] = {}
        self.recovered: list[PacketRecord] = []

    def begin_slot(self, slot_time):
        if self.slot_time is not None and slot_time <= self.slot_time:
            raise ConsistencyError(f"Слоты должны идти по возрастанию: {self.slot_time} -> {slot_time}")
        self.slot_time = slot_time
        self.slot_ids = frozenset()
        self.current_received = {}
        self.recovered = []

    def latest(self, vehicle_id) -> PacketRecord:
        """Последний архивный пакет ТС"""
        try:
            return self._latest[vehicle_id]
        except KeyError:
            raise ConsistencyError(f"ТС {vehicle_id} есть в множестве ID, но нет в истории") from None

    def archive(self, slot_time, records):
        self.history.append((slot_time, records))
        self._latest.update(records)
