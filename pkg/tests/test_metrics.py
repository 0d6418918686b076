#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_metrics
----------------------------------

Tests for `metrics` module.
"""

import math
import unittest

from ofdmatools.allocators import AllocationMatrix
from ofdmatools.metrics import (STDERR_COLUMNS, SUMMARY_COLUMNS, DropResult, aggregate, eta,
                                summarize)


def make_result(prb_counts, dropped, algorithm='mwdg', power_mode='uniform', users=4, drop=0,
                total_power=10.0):
    return DropResult(algorithm=algorithm, power_mode=power_mode, max_prbs=2,
                      users_per_cell=users, seed=drop, ipp_iterations=1,
                      served=[len(c) for c in prb_counts], dropped=dropped,
                      prb_counts=prb_counts, total_power=total_power, drop_index=drop)


class TestEta(unittest.TestCase):


    def test_000_mean_of_cell_means(self):
        result = make_result([[1, 1], [2], [1, 2, 3]], [0, 1, 0])
        self.assertAlmostEqual(eta(result), (1.0 + 2.0 + 2.0) / 3.0)


    def test_001_empty_cells_are_left_out(self):
        self.assertEqual(eta(make_result([[2, 2], []], [0, 4])), 2.0)
        self.assertIsNone(eta(make_result([[], []], [4, 4])))


    def test_002_single_prb_users(self):
        self.assertEqual(eta(make_result([[1, 1, 1], [1]], [0, 0])), 1.0)


class TestDropResult(unittest.TestCase):


    def test_000_from_allocations(self):
        allocations = {1: AllocationMatrix({3: [0, 1]}, dropped_users=[4, 5]),
                       0: AllocationMatrix({0: [2], 1: [3]})}
        result = DropResult.from_allocations(allocations, 7.5, algorithm='rg',
                                             power_mode='dpra', max_prbs=2, users_per_cell=3,
                                             seed=1, ipp_iterations=2)
        self.assertEqual(result.served, [2, 1])
        self.assertEqual(result.dropped, [0, 2])
        self.assertEqual(result.prb_counts, [[1, 1], [2]])
        self.assertEqual(result.load, 4)
        self.assertEqual(result.mean_dropped, 1.0)
        self.assertEqual(result.key, ('rg', 'dpra', 2, 3, 2))


class TestSummaries(unittest.TestCase):


    def test_000_summarize(self):
        mean, stderr, half_width = summarize([1.0, 2.0, 3.0])
        self.assertEqual(mean, 2.0)
        self.assertAlmostEqual(stderr, 1.0 / math.sqrt(3.0))
        self.assertAlmostEqual(half_width, 1.959963985 * stderr, places=8)


    def test_001_summarize_small_samples(self):
        mean, stderr, half_width = summarize([4.0])
        self.assertEqual(mean, 4.0)
        self.assertTrue(math.isnan(stderr) and math.isnan(half_width))
        self.assertTrue(all(math.isnan(v) for v in summarize([])))


    def test_002_aggregate(self):
        results = [make_result([[1], [2]], [1, 3], drop=1, total_power=4.0),
                   make_result([[1], [1]], [0, 0], drop=0, total_power=2.0),
                   make_result([[2], [2]], [2, 2], algorithm='meg', drop=0)]
        table = aggregate(results)
        self.assertEqual(list(table.columns), SUMMARY_COLUMNS + STDERR_COLUMNS)
        self.assertEqual(list(table['algorithm']), ['meg', 'mwdg'])
        row = table[table['algorithm'] == 'mwdg'].iloc[0]
        self.assertEqual(row['drops'], 2)
        self.assertEqual(row['mean_dropped'], 1.0)
        self.assertEqual(row['mean_eta'], 1.25)
        self.assertEqual(row['mean_total_power_w'], 3.0)
        self.assertEqual((row['M'], row['N'], row['J']), (2, 4, 1))
        self.assertTrue(math.isnan(table.iloc[0]['ci_dropped']))


    def test_003_aggregate_ignores_input_order(self):
        results = [make_result([[1], [2]], [1, 0], drop=d, users=n)
                   for n in (8, 4) for d in (2, 0, 1)]
        forward = aggregate(results)
        backward = aggregate(list(reversed(results)))
        self.assertTrue(forward.equals(backward))
        self.assertEqual(list(forward['N']), [4, 8])


    def test_004_empty(self):
        table = aggregate([])
        self.assertEqual(list(table.columns), SUMMARY_COLUMNS + STDERR_COLUMNS)
        self.assertEqual(len(table), 0)


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
