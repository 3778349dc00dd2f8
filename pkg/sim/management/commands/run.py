from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import FogWarnError
from sim.config import load_run_config
from sim.engine import run
from sim.reports import run_summary, write_run_outputs
from sim.services import save_run


class Command(BaseCommand):
    help = "Запускает симуляцию по конфигурации и пишет отчёт и журнал предупреждений"

    def add_arguments(self, parser):
        parser.add_argument("config", help="JSON-конфигурация прогона")
        parser.add_argument("--output-dir", help="Каталог результатов (по умолчанию из конфигурации)")
        parser.add_argument("--save", action="store_true", help="Сохранить итог прогона в базе")

    def handle(self, *args, **options):
        path = options["config"]
        try:
            config = load_run_config(path)
            report = run(config)
        except OSError as exc:
            raise CommandError(f"Не удалось прочитать конфигурацию {path}: {exc}")
        except FogWarnError as exc:
            raise CommandError(f"Ошибка прогона {path}: {exc}")

        output_dir = Path(options["output_dir"] or config.output_dir)
        try:
            paths = write_run_outputs(report, output_dir)
        except OSError as exc:
            raise CommandError(f"Не удалось записать результаты в {output_dir}: {exc}")

        if options["save"]:
            save_run(config, report, output_dir)

        self.stdout.write(run_summary(report))
        self.stdout.write(
            self.style.SUCCESS(f"Отчёт: {paths['report']}, журнал предупреждений: {paths['warnings']}")
        )
