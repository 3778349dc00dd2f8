from django.core.management.base import BaseCommand, CommandError

from channel.presets import PRESET_NAMES, preset
from core.exceptions import FogWarnError
from stable.io import write_latency_trace
from stable.services import synthetic_trace

# Объём полевой трассы DSRC, по которой получены эталонные параметры
FIELD_TRACE_SIZE = 1804


class Command(BaseCommand):
    help = "Генерирует синтетическую трассу задержек по пресету канала"

    def add_arguments(self, parser):
        parser.add_argument("output", help="Файл трассы")
        parser.add_argument("--count", type=int, default=FIELD_TRACE_SIZE)
        parser.add_argument("--seed", type=int, required=True)
        parser.add_argument("--preset", default="dsrc_field_fit", choices=PRESET_NAMES)

    def handle(self, *args, **options):
        if options["count"] < 1:
            raise CommandError("--count должен быть положительным")
        try:
            params = preset(options["preset"]).latency.params
            values = synthetic_trace(params, options["count"], options["seed"])
            write_latency_trace(options["output"], values)
        except FogWarnError as exc:
            raise CommandError(str(exc))
        except OSError as exc:
            raise CommandError(f"Не удалось записать {options['output']}: {exc}")

        self.stdout.write(
            self.style.SUCCESS(f"Трасса из {len(values)} задержек записана в {options['output']}")
        )
