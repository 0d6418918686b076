#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_channel
----------------------------------

Tests for `channel` module.
"""

import unittest

import numpy as np

from ofdmatools.errors import ConfigurationError
from ofdmatools.network import (ChannelTensor, PowerMap, UserPopulation, build_hex_grid,
                                compute_rates, draw_channel, drop_users, required_power,
                                shannon_rate, thermal_noise_power, uniform_power)
from ofdmatools.network.channel import link_gain, pathloss_db


class TestChannel(unittest.TestCase):


    def setUp(self):
        self.topology = build_hex_grid()
        self.population = drop_users(self.topology, 4, rng_seed=21)
        self.channel = draw_channel(self.topology, self.population, rng_seed=21)


    def test_000_pathloss(self):
        self.assertAlmostEqual(pathloss_db(1.0), 128.1)
        self.assertAlmostEqual(pathloss_db(0.1), 128.1 - 37.6)
        self.assertAlmostEqual(float(link_gain(1000.0)) / 10.0 ** -12.81, 1.0)
        self.assertAlmostEqual(float(link_gain(1000.0, shadow_db=3.0, fading=2.0))
                               / (2.0 * 10.0 ** -12.51), 1.0)


    def test_001_distance_is_clamped(self):
        self.assertEqual(float(link_gain(0.0)), float(link_gain(1.0)))
        self.assertEqual(float(link_gain(0.25)), float(link_gain(1.0)))
        self.assertLess(float(link_gain(2.0)), float(link_gain(1.0)))


    def test_002_noise(self):
        noise = thermal_noise_power(180e3)
        self.assertAlmostEqual(noise / (10.0 ** -19.5 * 180e3), 1.0)
        self.assertAlmostEqual(thermal_noise_power(1.0, -174.0, 0.0) / 10.0 ** -20.4, 1.0)


    def test_003_shannon_inverse(self):
        for rate in (1e4, 2e5, 9e5):
            power = required_power(rate, 1e-11, 2e-14, 3e-15, 180e3)
            self.assertAlmostEqual(shannon_rate(power, 1e-11, 2e-14, 3e-15, 180e3) / rate, 1.0,
                                   places=12)


    def test_004_channel_shape(self):
        gain = self.channel.gain
        self.assertEqual(gain.shape, (28, 24, 7))
        self.assertTrue(np.all(gain > 0))
        self.assertEqual(self.channel.serving_gain(self.population).shape, (28, 24))
        self.assertAlmostEqual(self.channel.noise_power,
                               thermal_noise_power(self.topology.prb_bandwidth))


    def test_005_channel_is_reproducible(self):
        again = draw_channel(self.topology, self.population, rng_seed=21)
        np.testing.assert_array_equal(self.channel.gain, again.gain)
        other = draw_channel(self.topology, self.population, rng_seed=22)
        self.assertFalse(np.array_equal(self.channel.gain, other.gain))


    def test_006_more_users_keep_existing_channels(self):
        population = drop_users(self.topology, 6, rng_seed=21)
        channel = draw_channel(self.topology, population, rng_seed=21)
        for cell in self.topology.cells:
            np.testing.assert_array_equal(channel.gain[population.users_in(cell)[:4]],
                                          self.channel.gain[self.population.users_in(cell)])


    def test_007_fading_has_unit_mean(self):
        population = drop_users(self.topology, 20, rng_seed=2)
        channel = draw_channel(self.topology, population, rng_seed=2, shadow_std_db=0.0)
        distances = population.distances(self.topology)
        fading = channel.gain / link_gain(distances[:, None, :])
        self.assertAlmostEqual(fading.mean(), 1.0, delta=0.03)


    def test_008_uniform_power(self):
        powers = uniform_power(self.topology)
        self.assertEqual(powers.power.shape, (7, 24))
        for cell in self.topology.cells:
            self.assertAlmostEqual(powers.total(cell), self.topology.total_power[cell])
        self.assertTrue(powers.within_budget(self.topology))
        with self.assertRaises(ConfigurationError):
            PowerMap(power=-np.ones((7, 24)))


    def test_009_rates_and_interference(self):
        powers = uniform_power(self.topology)
        rates = compute_rates(self.topology, self.population, self.channel, powers)
        self.assertEqual(rates.rate.shape, (28, 24))

        user, prb = 5, 7
        serving = self.population.serving_cell[user]
        others = [c for c in self.topology.cells if c != serving]
        interference = sum(powers.power[c, prb] * self.channel.gain[user, prb, c] for c in others)
        self.assertAlmostEqual(rates.interference[user, prb] / interference, 1.0, places=12)
        expected = self.topology.prb_bandwidth * np.log2(
            1.0 + powers.power[serving, prb] * self.channel.gain[user, prb, serving]
            / (interference + self.channel.noise_power))
        self.assertAlmostEqual(rates.rate[user, prb] / expected, 1.0, places=12)


    def test_010_single_cell_has_no_interference(self):
        topology = build_hex_grid(num_cells=1)
        population = drop_users(topology, 5, rng_seed=1)
        channel = draw_channel(topology, population, rng_seed=1)
        rates = compute_rates(topology, population, channel, uniform_power(topology))
        self.assertTrue(np.all(rates.interference == 0.0))
        self.assertTrue(np.all(rates.rate > 0.0))


    def test_011_zero_power_gives_zero_rate(self):
        power = np.array(uniform_power(self.topology).power)
        power[:, 3] = 0.0
        rates = compute_rates(self.topology, self.population, self.channel, PowerMap(power=power))
        self.assertTrue(np.all(rates.rate[:, 3] == 0.0))


    def test_012_rate_falls_as_a_neighbor_raises_power(self):
        base = np.array(uniform_power(self.topology).power)
        before = compute_rates(self.topology, self.population, self.channel, PowerMap(power=base))
        louder = np.array(base)
        louder[1, 0] *= 2.0
        after = compute_rates(self.topology, self.population, self.channel, PowerMap(power=louder))
        for cell in self.topology.cells:
            users = self.population.users_in(cell)
            if cell == 1:
                self.assertTrue(np.all(after.rate[users, 0] > before.rate[users, 0]))
            else:
                self.assertTrue(np.all(after.rate[users, 0] < before.rate[users, 0]))
            np.testing.assert_array_equal(after.rate[users, 1:], before.rate[users, 1:])


    def test_013_two_transmitting_cells(self):
        # 1 Hz PRBs, 3 W in the serving and one neighboring cell, cross gain 0.5, noise 0.5 W
        topology = build_hex_grid(total_power=6.0, num_prbs=2, system_bandwidth=2.0)
        population = UserPopulation(serving_cell=np.array([0]), index_in_cell=np.array([0]),
                                    positions=np.zeros((1, 2)), target_rate=np.array([1.0]))
        gain = np.full((1, 2, 7), 0.5)
        gain[:, :, 0] = 1.0
        channel = ChannelTensor(gain=gain, noise_power=0.5)
        power = np.zeros((7, 2))
        power[:2] = 3.0
        rates = compute_rates(topology, population, channel, PowerMap(power=power))
        np.testing.assert_allclose(rates.interference, 1.5)
        np.testing.assert_allclose(rates.rate, np.log2(2.5))
        self.assertAlmostEqual(rates.rate[0, 0], 1.3219, places=4)


    def test_014_own_power_override(self):
        uniform = uniform_power(self.topology)
        reduced = PowerMap(power=uniform.power * 0.25)
        rates = compute_rates(self.topology, self.population, self.channel, reduced,
                              own_powers=uniform)
        reference = compute_rates(self.topology, self.population, self.channel, reduced)
        np.testing.assert_array_equal(rates.interference, reference.interference)
        self.assertTrue(np.all(rates.rate > reference.rate))
        louder = compute_rates(self.topology, self.population, self.channel, uniform)
        self.assertTrue(np.all(rates.rate > louder.rate))


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
