import logging

from django.db import transaction

from core.files import canonical_json, file_digest

from .models import SimulationRun, SweepCellResult

logger = logging.getLogger(__name__)


def save_run(config, report, output_dir="") -> SimulationRun:
    run = SimulationRun.objects.create(
        name=config.name,
        algorithm=config.algorithm.value,
        seed=config.seed,
        scenario=config.scenario.name,
        true_positives=report.match.true_positives,
        false_positives=report.match.false_positives,
        false_negatives=report.match.false_negatives,
        precision=report.score.precision,
        recall=report.score.recall,
        packets=report.packets.as_dict(),
        report_digest=file_digest(canonical_json(report.as_dict())),
        output_dir=str(output_dir),
    )
    logger.info("Прогон сохранён в базе: %s", run)
    return run


@transaction.atomic
def save_sweep(name, rows) -> list[SweepCellResult]:
    """Перезаписывает ячейки серии name"""
    SweepCellResult.objects.filter(sweep=name).delete()
    return SweepCellResult.objects.bulk_create(
        SweepCellResult(
            sweep=name,
            axis=row["axis"],
            value=row["value"],
            algorithm=row["algorithm"],
            replicate=row["replicate"],
            seed=row["seed"],
            true_positives=row["tp"],
            false_positives=row["fp"],
            false_negatives=row["fn"],
            precision=row["precision"],
            recall=row["recall"],
            error=row.get("error") or "",
        )
        for row in rows
    )
