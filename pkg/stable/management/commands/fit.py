from django.core.management.base import BaseCommand, CommandError

from core.exceptions import FogWarnError
from core.files import atomic_write_text, canonical_json
from stable.io import read_latency_trace
from stable.params import FitConfig
from stable.services import fit_cached


class Command(BaseCommand):
    help = "Подгоняет устойчивое распределение к трассе задержек"

    def add_arguments(self, parser):
        parser.add_argument("trace", help="Файл трассы: одна задержка (мс) на строку")
        parser.add_argument("--k-points", type=int, default=FitConfig.k_points)
        parser.add_argument("--l-points", type=int, default=FitConfig.l_points)
        parser.add_argument("--max-iterations", type=int, default=FitConfig.max_iterations)
        parser.add_argument("--tol", type=float, default=FitConfig.convergence_tol)
        parser.add_argument("--output", help="Куда сохранить результат в JSON")

    def handle(self, *args, **options):
        path = options["trace"]
        try:
            values = read_latency_trace(path)
            config = FitConfig(
                max_iterations=options["max_iterations"],
                convergence_tol=options["tol"],
                k_points=options["k_points"],
                l_points=options["l_points"],
            )
            report = fit_cached(values, config)
        except OSError as exc:
            raise CommandError(f"Не удалось прочитать трассу {path}: {exc}")
        except FogWarnError as exc:
            raise CommandError(f"Ошибка подгонки для {path}: {exc}")

        document = canonical_json({"trace": str(path), "samples": len(values), **report.as_dict()})
        self.stdout.write(document, ending="")

        if options["output"]:
            atomic_write_text(options["output"], document)

        style = self.style.SUCCESS if report.converged else self.style.WARNING
        self.stderr.write(
            style(
                f"Подгонка по {len(values)} наблюдениям: итераций {report.iterations_used}, "
                f"сходимость: {'да' if report.converged else 'нет'}"
            )
        )
