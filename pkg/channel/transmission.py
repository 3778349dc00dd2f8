import logging
from collections import Counter
from dataclasses import dataclass

import numpy as np

from core.exceptions import ConfigError
from core.geometry import distance

from .latency import LatencyModel
from .packets import Delivery, Outcome, StatusPacket

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChannelConfig:
    latency: LatencyModel
    loss_rate: float = 0.0
    comm_range: float = 500.0
    name: str = "custom"

    def __post_init__(self):
        if not 0.0 <= self.loss_rate <= 1.0:
            raise ConfigError(f"Доля потерь должна лежать в [0, 1]: {self.loss_rate}")
        if not self.comm_range > 0:
            raise ConfigError(f"Радиус связи должен быть положительным: {self.comm_range}")

    def as_dict(self):
        return {
            "name": self.name,
            "latency": self.latency.as_dict(),
            "loss_rate": self.loss_rate,
            "comm_range": self.comm_range,
        }


def transmit(
    packet: StatusPacket,
    sender_location,
    fog_location,
    config: ChannelConfig,
    rng,
    sampler=None,
    latency_rng=None,
) -> Delivery:
    """Передача одного пакета.

    Вне радиуса связи пакет отбрасывается до любых обращений к rng; затем
    одно испытание Бернулли на потерю и только после него выбор задержки.
    С отдельным latency_rng задержка выбирается для каждого пакета в радиусе,
    так что при одном сиде потоки задержек совпадают при любой доле потерь.
    """
    if distance(sender_location, fog_location) > config.comm_range:
        return Delivery.out_of_range(packet)
    sampler = sampler or config.latency.sampler()
    latency = sampler.draw(latency_rng) if latency_rng is not None else None
    if rng.random() < config.loss_rate:
        return Delivery.lost(packet)
    if latency is None:
        latency = sampler.draw(rng)
    return Delivery.arrived(packet, latency)


class Channel:
    """Канал одного прогона: конфигурация, потоки rng, курсор трассы и счётчики исходов"""

    def __init__(self, config: ChannelConfig, rng: np.random.Generator, latency_rng=None):
        self.config = config
        self.rng = rng
        self.latency_rng = latency_rng
        self.sampler = config.latency.sampler()
        self.counts = Counter({outcome: 0 for outcome in Outcome})

    def send(self, packet: StatusPacket, fog_location) -> Delivery:
        delivery = transmit(
            packet,
            packet.location,
            fog_location,
            self.config,
            self.rng,
            self.sampler,
            self.latency_rng,
        )
        self.counts[delivery.outcome] += 1
        return delivery

    @property
    def sent(self):
        return sum(self.counts.values())
