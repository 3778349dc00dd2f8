import json
import math
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, tag

from core.exceptions import ConfigError
from sim.config import load_run_config
from sim.plots import plot_means
from sim.reports import MEANS_HEADER, RESULTS_HEADER, table_csv, write_sweep_outputs
from sim.sweep import SweepAxis, aggregate, build_cells, sweep

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
ALGORITHMS = ["CBW", "FWC", "TCCW"]


def load(name="crossing_pair_perfect.json"):
    return load_run_config(FIXTURES / name)


class SweepAxisTests(SimpleTestCase):
    def test_parse(self):
        axis = SweepAxis.parse("headway=1, 2,3")
        self.assertEqual((axis.name, axis.values), ("headway", ("1", "2", "3")))
        self.assertEqual(SweepAxis.parse("loss_rate=0.02").name, "loss")

    def test_invalid_axis(self):
        for text in ("speed=1,2", "headway", "headway=0", "loss=1.5", "loss=abc"):
            with self.subTest(text), self.assertRaises(ConfigError):
                SweepAxis.parse(text)

    def test_cell_seeds_do_not_depend_on_other_cells(self):
        base = load()
        wide = build_cells(base, SweepAxis.parse("loss=0,0.03,0.06"), ALGORITHMS, repeats=2)
        narrow = build_cells(base, SweepAxis.parse("loss=0.03"), ["TCCW"], repeats=2)
        seeds = {cell.slug: cell.seed for cell in wide}
        for cell in narrow:
            self.assertEqual(seeds[cell.slug], cell.seed)
        self.assertEqual(len({cell.seed for cell in wide}), len(wide))


    def test_paired_cells_share_seeds_across_values_and_algorithms(self):
        base = load()
        cells = build_cells(base, SweepAxis.parse("loss=0,0.03,0.06"), ALGORITHMS, repeats=3, paired=True)
        seeds = {}
        for cell in cells:
            seeds.setdefault(cell.replicate, set()).add(cell.seed)
        self.assertEqual([len(group) for group in seeds.values()], [1, 1, 1])
        self.assertEqual(len(set().union(*seeds.values())), 3)


class SweepTests(SimpleTestCase):
    def test_cardinality(self):
        result = sweep(load(), SweepAxis.parse("loss=0,0.03,0.06"), ALGORITHMS)
        self.assertEqual(len(result.rows), 9)
        self.assertEqual(len(result.means), 9)
        self.assertEqual({row["algorithm"] for row in result.rows}, set(ALGORITHMS))

    def test_empty_axis(self):
        result = sweep(load(), SweepAxis.parse("loss="), ALGORITHMS)
        self.assertEqual((result.rows, result.means), ([], []))
        self.assertEqual(table_csv(result.rows, RESULTS_HEADER).splitlines(), [",".join(RESULTS_HEADER)])

    def test_headway_axis_changes_threshold(self):
        result = sweep(load(), SweepAxis.parse("headway=0.3,1"), ["TCCW"])
        short, long = result.rows
        self.assertEqual((short["tp"], short["fp"], short["fn"]), (0, 0, 0))
        self.assertEqual((long["tp"], long["fp"], long["fn"]), (1, 0, 0))

    def test_resume_reuses_cell_files(self):
        axis = SweepAxis.parse("loss=0,0.5")
        with tempfile.TemporaryDirectory() as tmp:
            cells_dir = Path(tmp) / "cells"
            first = sweep(load(), axis, ["TCCW"], cells_dir=cells_dir)
            self.assertEqual(len(list(cells_dir.glob("*.json"))), 2)

            marker = cells_dir / "loss-0.5-TCCW-000.json"
            edited = {**json.loads(marker.read_text(encoding="utf-8")), "tp": 99}
            marker.write_text(json.dumps(edited), encoding="utf-8")

            resumed = sweep(load(), axis, ["TCCW"], cells_dir=cells_dir, resume=True)
            fresh = sweep(load(), axis, ["TCCW"], cells_dir=cells_dir)

        self.assertEqual(resumed.rows[1]["tp"], 99)
        self.assertEqual(resumed.rows[0], first.rows[0])
        self.assertEqual(fresh.rows, first.rows)

    def test_deterministic(self):
        axis = SweepAxis.parse("loss=0,0.03,0.06")
        base = load("four_way_light_fog.json")
        first = sweep(base, axis, ["TCCW"], repeats=1)
        second = sweep(base, axis, ["TCCW"], repeats=1)
        self.assertEqual(
            table_csv(first.rows, RESULTS_HEADER), table_csv(second.rows, RESULTS_HEADER)
        )

    def test_failed_cell_keeps_sweep_going(self):
        result = sweep(
            load(), SweepAxis.parse(f"scenario=missing.json,{FIXTURES.parent.parent / 'trajectory' / 'fixtures' / 'crossing_pair.json'}"), ["TCCW"]
        )
        failed, ok = result.rows
        self.assertIn("missing.json", failed["error"])
        self.assertIsNone(failed["precision"])
        self.assertIsNone(ok["error"])
        self.assertEqual(result.means[0]["failed"], 1)
        self.assertIsNone(result.means[0]["precision_mean"])

    def test_relative_scenario_resolves_against_config_directory(self):
        result = sweep(load(), SweepAxis.parse("scenario=../../trajectory/fixtures/crossing_pair.json"), ["TCCW"])
        (row,) = result.rows
        self.assertIsNone(row["error"])
        self.assertEqual((row["tp"], row["fp"], row["fn"]), (1, 0, 0))

    def test_malformed_scenario_documents_are_recorded(self):
        generator = {"approaches": [{"direction": "west", "count": 1, "first_arrival": 5}]}
        with tempfile.TemporaryDirectory() as tmp:
            listed = Path(tmp) / "listed.json"
            listed.write_text("[1, 2]", encoding="utf-8")
            named_seed = Path(tmp) / "named_seed.json"
            named_seed.write_text(json.dumps({"seed": "north", "generator": generator}), encoding="utf-8")
            axis = SweepAxis.parse(f"scenario={listed},{named_seed},../../trajectory/fixtures/crossing_pair.json")
            result = sweep(load(), axis, ["TCCW"])
        listed_row, seed_row, ok = result.rows
        self.assertTrue(listed_row["error"].startswith("AttributeError"))
        self.assertTrue(seed_row["error"].startswith("ValueError"))
        self.assertIsNone(seed_row["recall"])
        self.assertIsNone(ok["error"])
        self.assertEqual([row["failed"] for row in result.means], [1, 1, 0])

    def test_outputs_and_plot(self):
        result = sweep(load(), SweepAxis.parse("headway=0.5,1"), ALGORITHMS)
        with tempfile.TemporaryDirectory() as tmp:
            paths = write_sweep_outputs(result, tmp)
            header = paths["means"].read_text(encoding="utf-8").splitlines()[0]
            plot = plot_means(result.means, Path(tmp) / "headway.svg")
            first_svg = plot.read_bytes()
            second_svg = plot_means(result.means, Path(tmp) / "headway.svg").read_bytes()
        self.assertEqual(header, ",".join(MEANS_HEADER))
        self.assertEqual(first_svg, second_svg)
        self.assertIsNone(plot_means([], "unused.svg"))


class AggregateTests(SimpleTestCase):
    def test_mean_and_standard_error(self):
        rows = [
            {"axis": "loss", "value": "0", "algorithm": "TCCW", "precision": p, "recall": 1.0}
            for p in (0.5, 1.0, 1.0, 0.5)
        ]
        (row,) = aggregate(rows)
        self.assertEqual(row["runs"], 4)
        self.assertAlmostEqual(row["precision_mean"], 0.75)
        self.assertAlmostEqual(row["precision_se"], math.sqrt(0.25 / 3) / 2)
        self.assertEqual(row["recall_se"], 0.0)


def by_key(means):
    return {(row["value"], row["algorithm"]): row for row in means}


def slack(first, second, metric):
    return first[f"{metric}_se"] + second[f"{metric}_se"]


@tag("slow")
class AlgorithmOrderingTests(SimpleTestCase):
    """Средние по 20 парным повторам на перекрёстке crossing_dense; допуск в одну стандартную ошибку каждой стороны"""

    repeats = 20

    def means(self, axis_text, name="crossing_dense_fog.json"):
        base = load(name)
        axis = SweepAxis.parse(axis_text)
        return axis.values, by_key(sweep(base, axis, ALGORITHMS, repeats=self.repeats, paired=True).means)

    def assertNotWorse(self, better, worse, metric):
        self.assertGreaterEqual(
            better[f"{metric}_mean"], worse[f"{metric}_mean"] - slack(better, worse, metric)
        )

    def assertOrdered(self, values, means):
        for value in values:
            for metric in ("precision", "recall"):
                with self.subTest(value=value, metric=metric):
                    self.assertNotWorse(means[(value, "TCCW")], means[(value, "FWC")], metric)
                    self.assertNotWorse(means[(value, "FWC")], means[(value, "CBW")], metric)

    def test_loss_axis(self):
        values, means = self.means("loss=0,0.02,0.04,0.06")
        self.assertOrdered(values, means)

        for algorithm in ("CBW", "FWC"):
            for lower, higher in zip(values, values[1:]):
                for metric in ("precision", "recall"):
                    with self.subTest(algorithm=algorithm, loss=higher, metric=metric):
                        self.assertNotWorse(means[(lower, algorithm)], means[(higher, algorithm)], metric)

        def drop(algorithm, metric):
            return means[(values[0], algorithm)][f"{metric}_mean"] - means[(values[-1], algorithm)][f"{metric}_mean"]

        for algorithm in ("CBW", "FWC"):
            with self.subTest(algorithm=algorithm):
                self.assertLess(drop("TCCW", "recall"), drop(algorithm, "recall"))
                allowed = slack(means[(values[0], algorithm)], means[(values[-1], algorithm)], "precision")
                self.assertLessEqual(drop("TCCW", "precision"), drop(algorithm, "precision") + allowed)

    def test_headway_axis(self):
        values, means = self.means("headway=1,2,3,4,5")
        self.assertOrdered(values, means)

        for algorithm in ALGORITHMS:
            for shorter, longer in zip(values, values[1:]):
                with self.subTest(algorithm=algorithm, headway=longer):
                    self.assertNotWorse(means[(longer, algorithm)], means[(shorter, algorithm)], "precision")
                    self.assertNotWorse(means[(shorter, algorithm)], means[(longer, algorithm)], "recall")

    def test_scenario_axis(self):
        fixtures = FIXTURES.parent.parent / "trajectory" / "fixtures"
        names = ",".join(str(fixtures / f"crossing_{name}.json") for name in ("light", "dense", "peak"))
        values, means = self.means(f"scenario={names}")
        self.assertOrdered(values, means)
        for value in values:
            with self.subTest(scenario=value):
                self.assertEqual(means[(value, "TCCW")]["failed"], 0)
