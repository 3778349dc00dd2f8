from pathlib import Path

import numpy as np
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import FogWarnError
from core.files import atomic_write_text, canonical_json
from trajectory.io import serialize_trajectories
from trajectory.scenario import scenario_stats
from trajectory.sources import read_document
from trajectory.synthetic import SynthSpec, synth_scenario


class Command(BaseCommand):
    help = "Генерирует синтетический сценарий перекрёстка в файл траекторий"

    def add_arguments(self, parser):
        parser.add_argument("spec", help="JSON с параметрами генератора")
        parser.add_argument("--seed", type=int, required=True)
        parser.add_argument("--output", help="Файл траекторий (рядом пишется .json сценария)")

    def handle(self, *args, **options):
        spec_path = Path(options["spec"])
        output = Path(
            options["output"]
            or settings.FOGWARN_OUTPUT_DIR / f"{spec_path.stem}-{options['seed']}.txt"
        )
        try:
            document = read_document(spec_path)
            spec = SynthSpec.from_dict(document.get("generator", document), name=str(spec_path))
            scenario = synth_scenario(spec, np.random.default_rng(options["seed"]))
        except OSError as exc:
            raise CommandError(f"Не удалось прочитать {spec_path}: {exc}")
        except FogWarnError as exc:
            raise CommandError(f"{spec_path}: {exc}")

        sidecar = output.with_suffix(".json")
        try:
            atomic_write_text(output, serialize_trajectories(scenario.vehicles))
            atomic_write_text(
                sidecar,
                canonical_json(
                    {
                        "trajectories": output.name,
                        "format": "canonical",
                        "fog_location": list(scenario.fog_location),
                        "comm_range": scenario.comm_range,
                        "t_start": scenario.t_start,
                        "duration": scenario.duration,
                        "slot_period": scenario.slot_period,
                    }
                ),
            )
        except OSError as exc:
            raise CommandError(f"Не удалось записать {output}: {exc}")

        stats = scenario_stats(scenario)
        self.stdout.write(
            self.style.SUCCESS(
                f"Сценарий записан в {output} (ТС: {stats.vehicle_count}, "
                f"средняя скорость {stats.avg_speed:.1f} км/ч), описание: {sidecar}"
            )
        )
