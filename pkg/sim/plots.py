import logging
from itertools import groupby
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

logger = logging.getLogger(__name__)

AXIS_LABELS = {
    "headway": "Порог интервала ι, с",
    "loss": "Доля потерь пакетов",
    "scenario": "Сценарий",
}


def plot_means(means, path) -> Path | None:
    """Точность и полнота по оси для каждого алгоритма; SVG без даты в метаданных"""
    if not means:
        return None
    axis = means[0]["axis"]
    values = list(dict.fromkeys(row["value"] for row in means))
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with plt.rc_context({"svg.hashsalt": "fogwarn", "svg.fonttype": "none"}):
        figure, (ax_precision, ax_recall) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
        for algorithm, group in groupby(
            sorted(means, key=lambda row: (row["algorithm"], values.index(row["value"]))),
            key=lambda row: row["algorithm"],
        ):
            group = [row for row in group if row["precision_mean"] is not None]
            if axis == "scenario":
                xs = [values.index(row["value"]) for row in group]
            else:
                xs = [float(row["value"]) for row in group]
            ax_precision.errorbar(
                xs, [row["precision_mean"] for row in group],
                yerr=[row["precision_se"] for row in group], marker="o", capsize=3, label=algorithm,
            )
            ax_recall.errorbar(
                xs, [row["recall_mean"] for row in group],
                yerr=[row["recall_se"] for row in group], marker="o", capsize=3, label=algorithm,
            )

        for ax, title in ((ax_precision, "Точность"), (ax_recall, "Полнота")):
            ax.set_title(title)
            ax.set_xlabel(AXIS_LABELS.get(axis, axis))
            ax.set_ylim(-0.05, 1.05)
            ax.grid(True, alpha=0.3)
            if axis == "scenario":
                ax.set_xticks(range(len(values)))
                ax.set_xticklabels([Path(value).stem for value in values], rotation=20)
        ax_precision.legend()
        figure.tight_layout()
        figure.savefig(path, format="svg", metadata={"Date": None})
        plt.close(figure)

    logger.info("График записан в %s", path)
    return path
