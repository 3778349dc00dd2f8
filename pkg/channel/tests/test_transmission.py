import math

import numpy as np
from django.test import SimpleTestCase

from channel.latency import ConstantLatency, StableLatency, TraceLatency
from channel.packets import Delivery, Outcome, StatusPacket
from channel.presets import CLOUD_MEAN_MS, FOG_MEAN_MS, PRESET_NAMES, preset
from channel.transmission import Channel, ChannelConfig, transmit
from core.exceptions import ConfigError, DomainError
from stable.params import DSRC_FIELD_FIT

FOG = (0.0, 0.0)


def packet(x=100.0, sensed_time=10.0, vehicle_id="v1"):
    return StatusPacket(
        vehicle_id=vehicle_id,
        sensed_time=sensed_time,
        location=(x, 0.0),
        velocity=(10.0, 0.0),
        acceleration=(0.0, 0.0),
        heading=0.0,
    )


def mean_latency(config, draws=100_000, seed=0):
    channel = Channel(config, np.random.default_rng(seed))
    return float(np.mean([channel.send(packet(), FOG).latency for _ in range(draws)]))


class TransmitTests(SimpleTestCase):
    def test_out_of_range_regardless_of_rng(self):
        config = ChannelConfig(ConstantLatency(5.0), loss_rate=0.0)
        delivery = transmit(packet(x=600.0), (600.0, 0.0), FOG, config, np.random.default_rng(1))
        self.assertIs(delivery.outcome, Outcome.OUT_OF_RANGE)
        self.assertIsNone(delivery.arrival_time)

    def test_out_of_range_does_not_touch_rng(self):
        rng = np.random.default_rng(1)
        before = rng.bit_generator.state
        transmit(packet(x=600.0), (600.0, 0.0), FOG, preset("fog_dsrc"), rng)
        self.assertEqual(rng.bit_generator.state, before)

    def test_total_loss(self):
        config = ChannelConfig(ConstantLatency(5.0), loss_rate=1.0)
        delivery = transmit(packet(), (100.0, 0.0), FOG, config, np.random.default_rng(1))
        self.assertIs(delivery.outcome, Outcome.LOST)

    def test_arrival_time(self):
        config = ChannelConfig(ConstantLatency(80.0))
        delivery = transmit(packet(), (100.0, 0.0), FOG, config, np.random.default_rng(1))
        self.assertTrue(delivery.delivered)
        self.assertAlmostEqual(delivery.arrival_time, 10.08)

    def test_loss_frequency(self):
        draws = 100_000
        for loss_rate in (0.02, 0.06):
            channel = Channel(ChannelConfig(ConstantLatency(1.0), loss_rate=loss_rate), np.random.default_rng(3))
            for _ in range(draws):
                channel.send(packet(), FOG)
            observed = channel.counts[Outcome.LOST]
            margin = 3 * math.sqrt(draws * loss_rate * (1 - loss_rate))
            with self.subTest(loss_rate=loss_rate):
                self.assertLessEqual(abs(observed - draws * loss_rate), margin)
                self.assertEqual(channel.sent, draws)

    def test_same_seed_same_deliveries(self):
        def run():
            channel = Channel(preset("fog_dsrc", loss_rate=0.1), np.random.default_rng(9))
            return [channel.send(packet(sensed_time=float(t)), FOG) for t in range(200)]

        self.assertEqual(run(), run())

    def test_separate_latency_stream_is_shared_across_loss_rates(self):
        def deliveries(loss_rate):
            channel = Channel(
                preset("fog_dsrc", loss_rate=loss_rate), np.random.default_rng(4), np.random.default_rng(5)
            )
            return [channel.send(packet(sensed_time=float(t)), FOG) for t in range(500)]

        clean, lossy, lossier = deliveries(0.0), deliveries(0.1), deliveries(0.3)
        self.assertTrue(all(delivery.delivered for delivery in clean))
        for low, high in ((clean, lossy), (lossy, lossier)):
            for first, second in zip(low, high):
                if second.delivered:
                    self.assertTrue(first.delivered)
                    self.assertEqual(first.latency, second.latency)
        self.assertGreater(sum(not delivery.delivered for delivery in lossier), 100)

    def test_invalid_loss_rate(self):
        with self.assertRaises(ConfigError):
            ChannelConfig(ConstantLatency(1.0), loss_rate=1.5)


class LatencyModelTests(SimpleTestCase):
    def test_field_fit_mean(self):
        self.assertAlmostEqual(mean_latency(ChannelConfig(StableLatency(DSRC_FIELD_FIT))), 72.7, delta=2.0)

    def test_preset_means(self):
        self.assertAlmostEqual(mean_latency(preset("fog_dsrc")), FOG_MEAN_MS, delta=3.0)
        self.assertAlmostEqual(mean_latency(preset("cloud_lte")), CLOUD_MEAN_MS, delta=3.0)

    def test_unknown_preset(self):
        with self.assertRaisesMessage(ConfigError, "bogus"):
            preset("bogus")
        self.assertEqual(PRESET_NAMES, ["cloud_lte", "dsrc_field_fit", "fog_dsrc"])

    def test_trace_replayed_in_order(self):
        sampler = TraceLatency((5.0, 7.0), wrap=True).sampler()
        self.assertEqual([sampler.draw() for _ in range(5)], [5.0, 7.0, 5.0, 7.0, 5.0])

    def test_trace_exhausted(self):
        sampler = TraceLatency((5.0,), source="short.txt").sampler()
        sampler.draw()
        with self.assertRaisesMessage(ConfigError, "short.txt"):
            sampler.draw()

    def test_bad_trace_values(self):
        with self.assertRaises(ConfigError):
            TraceLatency(())
        with self.assertRaises(ConfigError):
            TraceLatency((1.0, -2.0))

    def test_constant_estimator_is_exact(self):
        params = ConstantLatency(40.0).estimator_params()
        self.assertEqual(params.mu, 40.0)
        self.assertLess(params.sigma, 1e-6)


class DeliveryTests(SimpleTestCase):
    def test_inconsistent_arrival_rejected(self):
        with self.assertRaises(DomainError):
            Delivery(packet(), Outcome.DELIVERED, arrival_time=99.0, latency=10.0)

    def test_negative_latency_rejected(self):
        with self.assertRaises(DomainError):
            Delivery.arrived(packet(), -1.0)
