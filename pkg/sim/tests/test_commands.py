import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from sim.cli import cli
from sim.config import load_run_config
from sim.engine import run
from sim.models import SimulationRun, SweepCellResult
from sim.services import save_run, save_sweep

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
CROSSING = str(FIXTURES / "crossing_pair_perfect.json")


class RunCommandTests(SimpleTestCase):
    def test_writes_report_and_warning_log(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = StringIO()
            call_command("run", CROSSING, output_dir=tmp, stdout=out)
            report = json.loads(Path(tmp, "report.json").read_text(encoding="utf-8"))
            warnings = Path(tmp, "warnings.csv").read_text(encoding="utf-8").splitlines()

        self.assertEqual(report["score"], {"precision": 1.0, "recall": 1.0})
        self.assertEqual(warnings[0], "slot_time,vehicle_id,other_vehicle,meet_x,meet_y,headway")
        self.assertGreater(len(warnings), 1)
        self.assertIn("1.000", out.getvalue())

    def test_identical_runs_identical_files(self):
        config = str(FIXTURES / "four_way_light_fog.json")
        contents = []
        for _ in range(2):
            with tempfile.TemporaryDirectory() as tmp:
                call_command("run", config, output_dir=tmp, stdout=StringIO())
                contents.append(
                    (Path(tmp, "report.json").read_bytes(), Path(tmp, "warnings.csv").read_bytes())
                )
        self.assertEqual(contents[0], contents[1])

    def test_missing_config_names_file(self):
        with self.assertRaisesMessage(CommandError, "missing.cfg"):
            call_command("run", "missing.cfg", stdout=StringIO())

    def test_invalid_config_names_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_text(json.dumps({"channel": {"preset": "fog_dsrc"}}), encoding="utf-8")
            with self.assertRaisesMessage(CommandError, "bad.json"):
                call_command("run", str(path), stdout=StringIO())


class SweepCommandTests(SimpleTestCase):
    def test_loss_axis_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            call_command(
                "sweep", CROSSING, axis="loss=0,0.03,0.06", repeats=1, output_dir=tmp, plot=True, stdout=StringIO()
            )
            results = Path(tmp, "results.csv").read_text(encoding="utf-8").splitlines()
            cells = list(Path(tmp, "cells").glob("*.json"))
            self.assertTrue(Path(tmp, "loss.svg").exists())

        self.assertEqual(len(results), 1 + 3 * 3)
        self.assertEqual(len(cells), 9)

    def test_identical_sweeps_identical_tables(self):
        tables = []
        for _ in range(2):
            with tempfile.TemporaryDirectory() as tmp:
                call_command(
                    "sweep", CROSSING, axis="loss=0,0.03,0.06", algorithms="TCCW", repeats=1,
                    output_dir=tmp, stdout=StringIO(),
                )
                tables.append(Path(tmp, "results.csv").read_bytes())
        self.assertEqual(tables[0], tables[1])

    def test_bad_axis(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(CommandError):
                call_command("sweep", CROSSING, axis="speed=1", output_dir=tmp, stdout=StringIO())

    def test_bad_algorithm(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(CommandError):
                call_command("sweep", CROSSING, axis="loss=0", algorithms="XYZ", output_dir=tmp, stdout=StringIO())


class CliTests(SimpleTestCase):
    def test_exit_codes(self):
        self.assertEqual(cli(["manage.py", "stats", str(FIXTURES.parent.parent / "trajectory" / "fixtures" / "crossing_pair.json")]), 0)
        self.assertEqual(cli(["manage.py", "run", "missing.cfg"]), 1)


class StorageTests(TestCase):
    def test_save_run(self):
        config = load_run_config(CROSSING)
        report = run(config)
        saved = save_run(config, report, "output")
        self.assertEqual(SimulationRun.objects.count(), 1)
        self.assertEqual(saved.true_positives, 1)
        self.assertEqual(saved.packets["sent"], report.packets.sent)
        self.assertEqual(len(saved.report_digest), 64)

    def test_save_sweep_overwrites(self):
        rows = [
            {"axis": "loss", "value": "0", "algorithm": "TCCW", "replicate": 0, "seed": 1,
             "tp": 1, "fp": 0, "fn": 0, "precision": 1.0, "recall": 1.0, "error": None},
            {"axis": "loss", "value": "x", "algorithm": "TCCW", "replicate": 0, "seed": 2,
             "tp": None, "fp": None, "fn": None, "precision": None, "recall": None, "error": "boom"},
        ]
        save_sweep("crossing:loss", rows)
        save_sweep("crossing:loss", rows)
        self.assertEqual(SweepCellResult.objects.filter(sweep="crossing:loss").count(), 2)
        self.assertTrue(SweepCellResult.objects.get(value="x").failed)

    def test_run_command_save(self):
        with tempfile.TemporaryDirectory() as tmp:
            call_command("run", CROSSING, output_dir=tmp, save=True, stdout=StringIO())
        self.assertEqual(SimulationRun.objects.get().algorithm, "TCCW")
