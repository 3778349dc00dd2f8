import csv
import io
from pathlib import Path

from core.files import atomic_write_text, canonical_json
from fog.export import warning_log_csv

RESULTS_HEADER = ["axis", "value", "algorithm", "tp", "fp", "fn", "precision", "recall", "seed"]
MEANS_HEADER = [
    "axis",
    "value",
    "algorithm",
    "runs",
    "failed",
    "precision_mean",
    "precision_se",
    "recall_mean",
    "recall_se",
]


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def table_csv(rows, header) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in header])
    return buffer.getvalue()


def write_run_outputs(report, directory) -> dict[str, Path]:
    directory = Path(directory)
    return {
        "report": atomic_write_text(directory / "report.json", canonical_json(report.as_dict())),
        "warnings": atomic_write_text(directory / "warnings.csv", warning_log_csv(report.warning_sets)),
    }


def write_sweep_outputs(result, directory) -> dict[str, Path]:
    directory = Path(directory)
    return {
        "results": atomic_write_text(directory / "results.csv", table_csv(result.rows, RESULTS_HEADER)),
        "means": atomic_write_text(directory / "means.csv", table_csv(result.means, MEANS_HEADER)),
    }


def run_summary(report) -> str:
    packets = report.packets
    return (
        f"Точность: {report.score.precision:.3f}, полнота: {report.score.recall:.3f} "
        f"(tp={report.match.true_positives}, fp={report.match.false_positives}, "
        f"fn={report.match.false_negatives}); пакеты: отправлено {packets.sent}, "
        f"доставлено {packets.delivered}, потеряно {packets.lost}, вне зоны {packets.out_of_range}, "
        f"восстановлено {packets.recovered}; время: {report.wall_time:.2f} с"
    )
