#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : test_eccentricity.py
# brief   : Tests of distances and eccentricities
#
# author  : radmax contributors
# created : 2026-09-03 09:55:40
# changed : 2026-10-16 15:12:27
# DESCRIPTION #################################################################
#
# This project is following the PEP8 style guide:
#
#    https://www.python.org/dev/peps/pep-0008/)
#
# COPYRIGHT ###################################################################
# Copyright 2026 radmax contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
###############################################################################

# REQUIRED PYTHON MODULES #####################################################
import unittest

import numpy as np

from radmax.constructions import build_H, build_radially_maximal, ConstructionParams
from radmax.exceptions import DisconnectedGraphError, GraphError
from radmax.graphs import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    bfs_distances,
    eccentric_vertices,
    eccentricity_profile,
    is_self_centered,
)

from helpers import floyd_warshall_oracle


class EccentricityTest(unittest.TestCase):

    def assertMatchesOracle(self, g):
        dist = floyd_warshall_oracle(g)
        for v in range(g.n):
            self.assertEqual(bfs_distances(g, v), list(dist[v]))
        np.testing.assert_array_equal(all_pairs_distances(g), dist)
        p = eccentricity_profile(g)
        ecc = dist.max(axis=1)
        self.assertEqual(list(p.ecc), list(ecc))
        self.assertEqual(p.radius, ecc.min())
        self.assertEqual(p.diameter, ecc.max())
        self.assertEqual(p.center, frozenset(np.flatnonzero(ecc == ecc.min()).tolist()))

    def test_bfs_distances(self):
        self.assertEqual(bfs_distances(Graph.cycle(4), 0), [0, 1, 2, 1])
        self.assertEqual(bfs_distances(Graph.complete(2), 0), [0, 1])
        with self.assertRaises(GraphError):
            bfs_distances(Graph.cycle(4), 4)

    def test_bfs_distances_h(self):
        h = build_H(3, 4)
        self.assertMatchesOracle(h.graph)
        self.assertEqual(bfs_distances(h.graph, h["x1"])[h["y2"]], 3)

    def test_unreachable(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        self.assertEqual(bfs_distances(g, 0), [0, 1, UNREACHABLE, UNREACHABLE])
        p = eccentricity_profile(g)
        self.assertFalse(p.connected)
        self.assertEqual(p.radius, UNREACHABLE)
        self.assertMatchesOracle(g)

    def test_profile(self):
        p = eccentricity_profile(Graph.cycle(8))
        self.assertEqual((p.radius, p.diameter), (4, 4))
        self.assertEqual(p.center, frozenset(range(8)))

        p = eccentricity_profile(Graph.path(3))
        self.assertEqual(p.ecc, (2, 1, 2))
        self.assertEqual((p.radius, p.diameter), (1, 2))
        self.assertEqual(p.center, frozenset({1}))
        self.assertEqual(p.periphery, frozenset({0, 2}))

        p = eccentricity_profile(build_H(6, 7).graph)
        self.assertEqual((p.radius, p.diameter), (6, 7))

    def test_eccentric_vertices(self):
        self.assertEqual(eccentric_vertices(Graph.cycle(4), 0), {2})
        self.assertEqual(eccentric_vertices(Graph.complete(3), 1), {0, 2})
        h = build_H(3, 4)
        self.assertEqual(eccentric_vertices(h.graph, h["x3"]), {h["y1"]})
        with self.assertRaises(DisconnectedGraphError):
            eccentric_vertices(Graph(3), 0)

    def test_is_self_centered(self, radii=range(2, 7)):
        for r in radii:
            self.assertTrue(is_self_centered(Graph.cycle(2 * r)))
        self.assertFalse(is_self_centered(Graph.path(3)))
        self.assertFalse(is_self_centered(build_H(4, 5).graph))
        with self.assertRaises(DisconnectedGraphError):
            is_self_centered(Graph(2))

    def test_oracle_random_graphs(self, samples=10000, max_order=8, seed=7):
        rng = np.random.default_rng(seed)
        seen = 0
        while seen < samples:
            n = int(rng.integers(1, max_order + 1))
            a = np.triu(rng.random((n, n)) < rng.uniform(0.2, 0.8), 1)
            g = Graph.from_adjacency_matrix(a | a.T)
            if not g.is_connected():
                continue
            dist = floyd_warshall_oracle(g)
            p = eccentricity_profile(g)
            self.assertEqual(list(p.ecc), list(dist.max(axis=1)))
            seen += 1

    def test_oracle_constructed_families(self):
        for r in range(2, 7):
            for d in range(r, 2 * r - 1):
                params = ConstructionParams(r, d, 0)
                params = ConstructionParams(r, d, params.floor + 2)
                self.assertMatchesOracle(build_radially_maximal(params).graph)
