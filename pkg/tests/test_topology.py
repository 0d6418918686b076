#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_topology
----------------------------------

Tests for `topology` module.
"""

import unittest

import numpy as np

from ofdmatools.errors import ConfigurationError
from ofdmatools.network import build_hex_grid, dbm_to_watts, drop_users, watts_to_dbm
from ofdmatools.network.topology import mean_hexagon_distance, substream


class TestTopology(unittest.TestCase):


    def setUp(self):
        self.topology = build_hex_grid()


    def test_000_units(self):
        self.assertAlmostEqual(float(dbm_to_watts(30.0)), 1.0)
        self.assertAlmostEqual(float(dbm_to_watts(43.0)), 19.9526231, places=6)
        self.assertAlmostEqual(float(watts_to_dbm(dbm_to_watts(17.5))), 17.5)


    def test_001_hex_grid(self):
        self.assertEqual(self.topology.num_cells, 7)
        np.testing.assert_allclose(self.topology.positions[0], [0.0, 0.0])
        np.testing.assert_allclose(self.topology.positions[1], [500.0, 0.0], atol=1e-9)
        spacing = np.hypot(*self.topology.positions[1:].T)
        np.testing.assert_allclose(spacing, 500.0)
        self.assertEqual(self.topology.apothem, 250.0)
        self.assertAlmostEqual(self.topology.prb_bandwidth, 5e6 / 24)
        self.assertAlmostEqual(self.topology.system_bandwidth, 5e6)
        np.testing.assert_allclose(self.topology.total_power, dbm_to_watts(43.0))


    def test_002_single_cell_and_rejections(self):
        self.assertEqual(build_hex_grid(num_cells=1).num_cells, 1)
        with self.assertRaises(ConfigurationError):
            build_hex_grid(num_cells=3)
        with self.assertRaises(ConfigurationError):
            build_hex_grid(inter_site_distance=0.0)
        with self.assertRaises(ValueError):
            build_hex_grid(num_prbs=0)


    def test_003_hexagon_membership(self):
        radius = 500.0 / np.sqrt(3.0)
        points = np.array([[0.0, 0.0], [249.0, 0.0], [251.0, 0.0], [0.0, radius - 1.0],
                           [0.0, radius + 1.0]])
        self.assertEqual(list(self.topology.contains(0, points)),
                         [True, True, False, True, False])
        self.assertTrue(self.topology.contains(1, self.topology.positions[1])[0])


    def test_004_users_inside_their_cell(self):
        population = drop_users(self.topology, 12, rng_seed=5)
        self.assertEqual(population.num_users, 84)
        for cell in self.topology.cells:
            users = population.users_in(cell)
            self.assertEqual(len(users), 12)
            self.assertTrue(np.all(self.topology.contains(cell, population.positions[users])))
        np.testing.assert_allclose(population.target_rate, 768e3)


    def test_005_drop_is_reproducible(self):
        first = drop_users(self.topology, 6, rng_seed=11)
        second = drop_users(self.topology, 6, rng_seed=11)
        other = drop_users(self.topology, 6, rng_seed=12)
        np.testing.assert_array_equal(first.positions, second.positions)
        self.assertFalse(np.array_equal(first.positions, other.positions))


    def test_006_more_users_keep_existing_positions(self):
        small = drop_users(self.topology, 5, rng_seed=3)
        large = drop_users(self.topology, 9, rng_seed=3)
        for cell in self.topology.cells:
            np.testing.assert_array_equal(small.positions[small.users_in(cell)],
                                          large.positions[large.users_in(cell)][:5])


    def test_007_mean_distance(self):
        topology = build_hex_grid(num_cells=1)
        population = drop_users(topology, 20000, rng_seed=1)
        mean = population.distances(topology).mean()
        self.assertAlmostEqual(mean / mean_hexagon_distance(topology.apothem), 1.0, delta=0.01)


    def test_008_invalid_population(self):
        with self.assertRaises(ConfigurationError):
            drop_users(self.topology, 0, rng_seed=1)


    def test_009_substreams_are_independent(self):
        a = substream(4, 0, 1).random(3)
        b = substream(4, 0, 2).random(3)
        np.testing.assert_array_equal(a, substream(4, 0, 1).random(3))
        self.assertFalse(np.array_equal(a, b))


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
