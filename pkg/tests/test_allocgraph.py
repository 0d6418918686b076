#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_allocgraph
----------------------------------

Tests for `allocgraph` module, on the three-user example and on random cells.
"""

import itertools
import unittest

import numpy as np

from ofdmatools.errors import ConfigurationError
from ofdmatools.graphs import build_graph, weighted_degree
from ofdmatools.scenarios import random_instances, toy


def brute_force_degrees(graph, alive):
    nxgraph = graph.to_networkx()
    degrees = {}
    for vertex in np.flatnonzero(alive):
        total = sum(nxgraph.nodes[n]['weight'] for n in nxgraph.neighbors(int(vertex))
                    if alive[n])
        degrees[int(vertex)] = float(total) / graph.weight(vertex)
    return degrees


class TestAllocGraph(unittest.TestCase):


    def setUp(self):
        self.graph = toy.toy_graph()


    def test_000_toy_vertices(self):
        self.assertEqual(self.graph.num_vertices, 9)
        self.assertEqual(list(self.graph.weights), [3, 3, 3, 3, 2, 2, 3, 2, 3])
        self.assertEqual(list(self.graph.owners), [1, 1, 1, 2, 2, 2, 3, 3, 3])
        self.assertEqual(self.graph.prb_sets[4], (1, 2))
        self.assertEqual(self.graph.users, [1, 2, 3])
        self.assertEqual(self.graph.cliques[2], frozenset([3, 4, 5]))
        self.assertEqual(toy.vertex(self.graph, 3, 3), 8)
        self.assertEqual(self.graph.vertex_of(2, (3, 1)), 5)
        with self.assertRaises(KeyError):
            self.graph.vertex_of(1, (2,))


    def test_001_toy_adjacency(self):
        self.assertEqual(self.graph.neighbors(0), [1, 2, 3, 6])
        self.assertEqual(self.graph.neighbors(3), [0, 4, 5, 6])
        self.assertTrue(self.graph.adjacent(4, 7))
        self.assertFalse(self.graph.adjacent(0, 8))
        self.assertFalse(self.graph.adjacent(3, 3))
        for a, b in itertools.combinations(self.graph.vertices(), 2):
            expected = (self.graph.owner(a) == self.graph.owner(b)
                        or bool(set(self.graph.prb_sets[a]) & set(self.graph.prb_sets[b])))
            self.assertEqual(self.graph.adjacent(a, b), expected)


    def test_002_toy_weighted_degrees(self):
        degrees = self.graph.weighted_degrees()
        minimizers = [int(v) for v in np.flatnonzero(degrees == degrees.min())]
        self.assertEqual(minimizers, [toy.vertex(self.graph, 2, 1), toy.vertex(self.graph, 3, 3)])
        self.assertEqual(degrees[3], 10.0 / 3.0)
        self.assertEqual(weighted_degree(self.graph, 8), 10.0 / 3.0)
        self.assertEqual(degrees[0], 4.0)
        self.assertEqual(degrees[4], 5.0)


    def test_003_residual_degrees(self):
        alive = np.zeros(9, dtype=bool)
        alive[[1, 2, 7, 8]] = True
        degrees = self.graph.weighted_degrees(alive)
        self.assertAlmostEqual(degrees[1], 5.0 / 3.0)
        self.assertAlmostEqual(degrees[2], 2.0)
        self.assertAlmostEqual(degrees[7], 3.0)
        self.assertAlmostEqual(degrees[8], 5.0 / 3.0)


    def test_004_degrees_match_networkx(self):
        rng = np.random.default_rng(8)
        for graph, _ in random_instances(seed=8, count=40, max_vertices=60):
            if graph.num_vertices == 0:
                continue
            alive = rng.random(graph.num_vertices) < 0.7
            degrees = graph.weighted_degrees(alive)
            for vertex, expected in brute_force_degrees(graph, alive).items():
                self.assertAlmostEqual(degrees[vertex], expected, places=9)


    def test_005_networkx_export(self):
        nxgraph = self.graph.to_networkx()
        self.assertEqual(nxgraph.number_of_nodes(), 9)
        self.assertEqual(sorted(nxgraph.edges()), sorted(self.graph.edges()))
        self.assertEqual(nxgraph.nodes[5], {'owner': 2, 'prbs': (1, 3), 'weight': 2})


    def test_006_text_export(self):
        lines = self.graph.to_text().splitlines()
        self.assertEqual(len(lines), 9)
        self.assertEqual(lines[0], '0 1 0 3 1 2 3 6')
        self.assertEqual(lines[4], '4 2 1,2 2 1 3 5 7')


    def test_007_independence_and_weight_identity(self):
        selection = [3, 1, 8]
        self.assertTrue(self.graph.is_independent(selection))
        self.assertFalse(self.graph.is_independent([3, 0]))
        load = sum(len(self.graph.prb_sets[v]) for v in selection)
        self.assertEqual(self.graph.weight_of(selection),
                         len(self.graph.users) * self.graph.num_prbs - load)


    def test_008_build_rules(self):
        graph = build_graph({0: [(1,), (0,)], 1: [], 2: [(0, 2)]}, 4)
        self.assertEqual(graph.prb_sets, ((0,), (1,), (0, 2)))
        self.assertEqual(graph.excluded_users, frozenset([1]))
        self.assertEqual(graph.users, [0, 2])
        with self.assertRaises(ConfigurationError):
            build_graph({0: [(0, 1)]}, 2)


    def test_009_empty_graph(self):
        graph = build_graph({0: [], 1: []}, 4)
        self.assertEqual(graph.num_vertices, 0)
        self.assertEqual(len(graph.weighted_degrees()), 0)
        self.assertEqual(graph.excluded_users, frozenset([0, 1]))


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
