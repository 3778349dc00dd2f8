from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import FogWarnError
from fog.algorithms import Algorithm
from sim.config import load_run_config
from sim.plots import plot_means
from sim.reports import write_sweep_outputs
from sim.services import save_sweep
from sim.sweep import SweepAxis, sweep


class Command(BaseCommand):
    help = "Серия прогонов по оси headway, loss или scenario"

    def add_arguments(self, parser):
        parser.add_argument("config", help="Базовая JSON-конфигурация")
        parser.add_argument("--axis", required=True, help="Например headway=1,2,3 или loss=0,0.03,0.06")
        parser.add_argument("--algorithms", default="CBW,FWC,TCCW")
        parser.add_argument("--repeats", type=int, default=None, help="Повторов на ячейку")
        parser.add_argument("--workers", type=int, default=1)
        parser.add_argument("--output-dir")
        parser.add_argument("--resume", action="store_true", help="Не пересчитывать готовые ячейки")
        parser.add_argument(
            "--paired", action="store_true", help="Общие сиды повторов для всех значений оси и алгоритмов"
        )
        parser.add_argument("--plot", action="store_true", help="Построить SVG-графики средних")
        parser.add_argument("--save", action="store_true", help="Сохранить ячейки в базе")

    def handle(self, *args, **options):
        path = options["config"]
        repeats = options["repeats"] or settings.FOGWARN_SWEEP_REPEATS
        if repeats < 1 or options["workers"] < 1:
            raise CommandError("--repeats и --workers должны быть положительными")

        try:
            base = load_run_config(path)
            axis = SweepAxis.parse(options["axis"])
            algorithms = [
                Algorithm.parse(name) for name in options["algorithms"].split(",") if name.strip()
            ]
        except OSError as exc:
            raise CommandError(f"Не удалось прочитать конфигурацию {path}: {exc}")
        except FogWarnError as exc:
            raise CommandError(f"{path}: {exc}")

        output_dir = Path(options["output_dir"] or base.output_dir)
        try:
            result = sweep(
                base,
                axis,
                algorithms,
                repeats=repeats,
                workers=options["workers"],
                cells_dir=output_dir / "cells",
                resume=options["resume"],
                paired=options["paired"],
            )
            paths = write_sweep_outputs(result, output_dir)
            if options["plot"]:
                plot = plot_means(result.means, output_dir / f"{axis.name}.svg")
                if plot:
                    paths["plot"] = plot
        except OSError as exc:
            raise CommandError(f"Не удалось записать результаты в {output_dir}: {exc}")
        except FogWarnError as exc:
            raise CommandError(f"{path}: {exc}")

        if options["save"]:
            save_sweep(f"{base.name}:{axis.name}", result.rows)

        failed = sum(1 for row in result.rows if row.get("error"))
        for row in result.means:
            self.stdout.write(
                f"{row['axis']}={row['value']} {row['algorithm']}: "
                f"точность {_fmt(row['precision_mean'])}, полнота {_fmt(row['recall_mean'])}"
            )
        style = self.style.WARNING if failed else self.style.SUCCESS
        self.stdout.write(
            style(f"Ячеек: {len(result.rows)}, с ошибкой: {failed}; таблица: {paths['results']}")
        )


def _fmt(value):
    return "-" if value is None else f"{value:.3f}"
