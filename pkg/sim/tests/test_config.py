import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from channel.latency import ConstantLatency, StableLatency
from core.exceptions import ConfigError
from fog.algorithms import Algorithm
from fog.state import LatencyEstimator
from sim.config import load_run_config, run_config_from_dict

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def base_data(**overrides):
    data = json.loads((FIXTURES / "crossing_pair_perfect.json").read_text(encoding="utf-8"))
    data.update(overrides)
    return data


def build(**overrides):
    return run_config_from_dict(base_data(**overrides), FIXTURES, name="crossing")


class RunConfigTests(SimpleTestCase):
    def test_bundled_config(self):
        config = load_run_config(FIXTURES / "crossing_pair_perfect.json")
        self.assertIs(config.algorithm, Algorithm.TCCW)
        self.assertEqual(config.headway, 1.0)
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.scenario.seed, 1)
        self.assertIsInstance(config.channel.latency, ConstantLatency)
        self.assertIs(config.estimator, LatencyEstimator.RANDOM)
        self.assertEqual(config.tolerance, config.predict_horizon)

    def test_defaults(self):
        data = base_data()
        for section in ("thresholds", "fog", "emission", "cloud_channel"):
            data.pop(section)
        config = run_config_from_dict(data, FIXTURES)
        self.assertEqual((config.tau, config.gamma, config.headway), (10.0, 0.2, 3.0))
        self.assertEqual(config.cloud_channel.name, "cloud_lte")
        self.assertEqual((config.emission_phase, config.emission_jitter), (0.0, 0.0))
        self.assertEqual(config.base_dir, FIXTURES)

    def test_emission_phase(self):
        config = build(emission={"phase": 0.865})
        self.assertEqual(config.emission_phase, 0.865)
        self.assertEqual(config.as_dict()["emission"], {"phase": 0.865, "jitter": 0.0})
        with self.assertRaisesMessage(ConfigError, "emission.phase"):
            build(emission={"phase": -0.1})

    def test_preset_channel(self):
        config = build(channel={"preset": "fog_dsrc", "loss_rate": 0.04})
        self.assertIsInstance(config.channel.latency, StableLatency)
        self.assertEqual(config.channel.loss_rate, 0.04)
        self.assertEqual(config.with_loss_rate(0.06).cloud_channel.loss_rate, 0.06)

    def test_cbw_uses_cloud_channel(self):
        config = build(algorithm="CBW", cloud_channel={"preset": "cloud_lte"})
        self.assertEqual(config.channel_for(300.0).name, "cloud_lte")
        self.assertEqual(config.channel_for(300.0).comm_range, 300.0)

    def test_unknown_section(self):
        with self.assertRaisesMessage(ConfigError, "metrics"):
            build(metrics={})

    def test_missing_channel(self):
        data = base_data()
        data.pop("channel")
        with self.assertRaises(ConfigError):
            run_config_from_dict(data, FIXTURES)

    def test_invalid_values(self):
        cases = {
            "channel": {"channel": {"preset": "bogus"}},
            "channel.loss_rate": {"channel": {"preset": "fog_dsrc", "loss_rate": 1.5}},
            "thresholds.headway": {"thresholds": {"headway": 0}},
            "thresholds.tau": {"thresholds": {"tau": -1}},
            "algorithm": {"algorithm": "XYZ"},
            "seed": {"seed": -3},
        }
        for fragment, overrides in cases.items():
            with self.subTest(fragment), self.assertRaisesMessage(ConfigError, fragment):
                build(**overrides)

    def test_preset_and_model_are_exclusive(self):
        with self.assertRaises(ConfigError):
            build(channel={"preset": "fog_dsrc", "model": "constant", "latency_ms": 1})
        with self.assertRaises(ConfigError):
            build(channel={"model": "stable", "alpha": 1.5})

    def test_inline_scenario_without_seed_uses_master_seed(self):
        scenario = json.loads(
            (FIXTURES.parent.parent / "trajectory" / "fixtures" / "crossing_pair.json").read_text(encoding="utf-8")
        )
        scenario.pop("seed")
        first = build(scenario=scenario)
        self.assertEqual(first.scenario.seed, build(scenario=scenario).scenario.seed)
        self.assertNotEqual(first.scenario.seed, build(scenario=scenario, seed=8).scenario.seed)

    def test_trace_channel(self):
        with tempfile.TemporaryDirectory() as tmp:
            Path(tmp, "trace.txt").write_text("70\n80\n", encoding="utf-8")
            data = base_data(channel={"model": "trace", "trace": "trace.txt", "wrap": True})
            data["scenario"] = {"document": str(FIXTURES.parent.parent / "trajectory" / "fixtures" / "crossing_pair.json")}
            config = run_config_from_dict(data, tmp)
        self.assertEqual(config.channel.latency.values, (70.0, 80.0))
        self.assertTrue(config.channel.latency.wrap)

    def test_broken_json_names_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "broken.json"
            path.write_text("{", encoding="utf-8")
            with self.assertRaisesMessage(ConfigError, "broken.json"):
                load_run_config(path)

    def test_missing_file(self):
        with self.assertRaises(OSError):
            load_run_config("missing.cfg")
