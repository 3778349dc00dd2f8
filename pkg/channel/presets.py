from core.exceptions import ConfigError
from stable.params import DSRC_FIELD_FIT

from .latency import StableLatency
from .transmission import ChannelConfig

FOG_MEAN_MS = 77.0
CLOUD_MEAN_MS = 120.0
DEFAULT_COMM_RANGE = 500.0

# форма распределения (α, β, σ) общая, сдвинут только μ: при α > 1 он равен среднему
FOG_DSRC = DSRC_FIELD_FIT.shifted(FOG_MEAN_MS - DSRC_FIELD_FIT.mu)
CLOUD_LTE = FOG_DSRC.shifted(CLOUD_MEAN_MS - FOG_MEAN_MS)

PRESETS = {
    "fog_dsrc": FOG_DSRC,
    "cloud_lte": CLOUD_LTE,
    "dsrc_field_fit": DSRC_FIELD_FIT,
}
PRESET_NAMES = sorted(PRESETS)


def preset(name, loss_rate=0.0, comm_range=DEFAULT_COMM_RANGE) -> ChannelConfig:
    try:
        params = PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"Неизвестный пресет канала: {name} (доступны: {', '.join(PRESET_NAMES)})"
        ) from None
    return ChannelConfig(
        latency=StableLatency(params), loss_rate=loss_rate, comm_range=comm_range, name=name
    )
