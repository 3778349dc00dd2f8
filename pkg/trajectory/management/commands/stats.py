from django.core.management.base import BaseCommand, CommandError

from core.exceptions import FogWarnError
from core.files import canonical_json
from trajectory.scenario import scenario_stats
from trajectory.sources import load_scenario


class Command(BaseCommand):
    help = "Показывает характеристики сценария: число ТС, средние скорость и ускорение"

    def add_arguments(self, parser):
        parser.add_argument("scenario", help="JSON-описание сценария")
        parser.add_argument("--seed", type=int, help="Seed генератора (важнее seed из файла)")

    def handle(self, *args, **options):
        path = options["scenario"]
        try:
            scenario = load_scenario(path, options["seed"])
        except OSError as exc:
            raise CommandError(f"Не удалось прочитать сценарий {path}: {exc}")
        except FogWarnError as exc:
            raise CommandError(f"{path}: {exc}")

        stats = scenario_stats(scenario)
        self.stdout.write(canonical_json({"scenario": str(path), **stats.as_dict()}), ending="")
        self.stderr.write(
            f"ТС: {stats.vehicle_count}, средняя скорость: {stats.avg_speed:.2f} км/ч, "
            f"среднее ускорение: {stats.avg_accel:.2f} м/с²"
        )
