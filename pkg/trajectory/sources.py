import json
import logging
from pathlib import Path

import numpy as np

from core.exceptions import ConfigError
from core.validation import clean_form

from .forms import ExtractionForm
from .io import read_trajectories
from .scenario import Scenario, extract_scenario
from .synthetic import SynthSpec, synth_scenario

logger = logging.getLogger(__name__)


def read_document(path):
    path = Path(path)
    with open(path, encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: некорректный JSON ({exc})") from None


def scenario_from_document(document, base_dir=".", seed=None, name="scenario") -> Scenario:
    """Сценарий из описания: генератор ("generator") или срез файла траекторий ("trajectories").

    Явный seed важнее seed из документа; генератор без seed не запускается.
    """
    if not isinstance(document, dict):
        raise ConfigError(f"{name}: описание сценария должно быть объектом")

    if "generator" in document:
        seed = document.get("seed") if seed is None else seed
        if seed is None:
            raise ConfigError(f"{name}: для генератора нужен seed")
        spec = SynthSpec.from_dict(document["generator"], name=name)
        return synth_scenario(spec, np.random.default_rng(int(seed)))

    if "trajectories" in document:
        cleaned = clean_form(ExtractionForm, document, name)
        path = Path(base_dir) / cleaned["trajectories"]
        store = read_trajectories(path, cleaned["format"])
        return extract_scenario(
            store,
            tuple(float(value) for value in cleaned["fog_location"]),
            cleaned["comm_range"],
            cleaned["t_start"],
            cleaned["duration"],
            cleaned["slot_period"],
        )

    raise ConfigError(f"{name}: нужен раздел generator или trajectories")


def load_scenario(path, seed=None) -> Scenario:
    path = Path(path)
    return scenario_from_document(read_document(path), path.parent, seed, name=str(path))
