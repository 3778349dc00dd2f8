from django.test import SimpleTestCase

from core.exceptions import DomainError
from trajectory.points import TrajectoryPoint
from trajectory.scenario import Scenario, extract_scenario, scenario_stats


def line(vehicle_id, start, velocity, times):
    return [
        TrajectoryPoint(
            time=t, vehicle_id=vehicle_id, x=start[0] + velocity[0] * t, y=start[1] + velocity[1] * t
        )
        for t in times
    ]


def extract(store, t_start=0.0, duration=10.0):
    return extract_scenario(store, (0.0, 0.0), 500.0, t_start, duration, 1.0)


class ExtractScenarioTests(SimpleTestCase):
    def test_vehicle_outside_range_dropped(self):
        store = {"far": line("far", (600.0, 0.0), (0.0, 0.0), range(5))}
        self.assertEqual(extract(store).vehicle_ids, [])

    def test_vehicle_entering_range_kept(self):
        store = {"v": line("v", (600.0, 0.0), (-40.0, 0.0), range(6))}
        self.assertEqual(extract(store).vehicle_ids, ["v"])

    def test_start_after_dataset_end(self):
        store = {"v": line("v", (0.0, 0.0), (10.0, 0.0), range(5))}
        scenario = extract(store, t_start=100.0)
        self.assertEqual(scenario.vehicles, {})

    def test_window_and_kinematics(self):
        store = {"v": line("v", (0.0, 0.0), (10.0, 0.0), range(20))}
        scenario = extract(store, t_start=5.0, duration=5.0)
        self.assertEqual([p.time for p in scenario.vehicles["v"]], [5, 6, 7, 8, 9, 10])
        self.assertAlmostEqual(scenario.vehicles["v"][0].speed, 10.0)

    def test_invalid_window(self):
        with self.assertRaises(DomainError):
            extract_scenario({}, (0.0, 0.0), 500.0, 0.0, 0.0, 1.0)


class StateAtTests(SimpleTestCase):
    def setUp(self):
        store = {"v": line("v", (0.0, 0.0), (10.0, 0.0), [0.0, 1.0, 2.0])}
        self.scenario = extract(store)

    def test_grid_point(self):
        self.assertEqual(self.scenario.state_at("v", 1.0).location, (10.0, 0.0))

    def test_interpolation(self):
        state = self.scenario.state_at("v", 1.5)
        self.assertAlmostEqual(state.x, 15.0)
        self.assertAlmostEqual(state.speed, 10.0)

    def test_outside_lifetime(self):
        self.assertIsNone(self.scenario.state_at("v", 2.5))
        self.assertIsNone(self.scenario.state_at("unknown", 1.0))
        self.assertEqual(self.scenario.lifetime("v"), (0.0, 2.0))


class ScenarioStatsTests(SimpleTestCase):
    def test_single_vehicle_constant_speed(self):
        stats = scenario_stats(extract({"v": line("v", (0.0, 0.0), (10.0, 0.0), range(5))}))
        self.assertEqual(stats.vehicle_count, 1)
        self.assertAlmostEqual(stats.avg_speed, 36.0)
        self.assertAlmostEqual(stats.avg_accel, 0.0)

    def test_two_vehicles(self):
        store = {
            "a": line("a", (0.0, 0.0), (10.0, 0.0), range(5)),
            "b": line("b", (0.0, 5.0), (0.0, 20.0), range(5)),
        }
        self.assertAlmostEqual(scenario_stats(extract(store)).avg_speed, 54.0)

    def test_empty(self):
        stats = scenario_stats(Scenario({}, (0.0, 0.0), 500.0, 0.0, 10.0, 1.0))
        self.assertEqual(stats.as_dict(), {"vehicle_count": 0, "avg_speed": 0.0, "avg_accel": 0.0})
