#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : eccentricity.py
# brief   : Distances, eccentricities, radius, diameter and center
#
# author  : radmax contributors
# created : 2026-09-03 09:14:51
# changed : 2026-10-16 14:40:02
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
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import floyd_warshall

from radmax.exceptions import DisconnectedGraphError
from radmax.graphs.graph import Graph, iter_bits, reached_from

# distance / eccentricity sentinel for unreachable vertices
UNREACHABLE = math.inf

Distance = Union[int, float]


@dataclass(frozen=True)
class EccentricityProfile:
    """
    Per-vertex eccentricities together with radius, diameter and center.
    Disconnected graphs carry `UNREACHABLE` entries and an infinite radius.
    """

    ecc: Tuple[Distance, ...]
    radius: Distance
    diameter: Distance
    center: FrozenSet[int]

    @classmethod
    def from_eccentricities(cls, ecc: Sequence[Distance]) -> "EccentricityProfile":
        ecc = tuple(ecc)
        radius = min(ecc)
        return cls(
            ecc=ecc,
            radius=radius,
            diameter=max(ecc),
            center=frozenset(v for v, e in enumerate(ecc) if e == radius),
        )

    @property
    def connected(self) -> bool:
        return self.diameter != UNREACHABLE

    @property
    def self_centered(self) -> bool:
        return self.connected and self.radius == self.diameter

    @property
    def periphery(self) -> FrozenSet[int]:
        return frozenset(v for v, e in enumerate(self.ecc) if e == self.diameter)


# function definitions ########################################################
def eccentricity_of(rows: Sequence[int], v: int, full: int) -> Distance:
    """
    Eccentricity of v by word-parallel BFS over the bitset rows.
    """
    reached = frontier = 1 << v
    level = 0
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~reached
        if not frontier:
            break
        reached |= frontier
        level += 1
    return level if reached == full else UNREACHABLE


def within(rows: Sequence[int], v: int, depth: int, full: int) -> bool:
    """
    True iff every vertex lies at distance at most `depth` from v, i.e.
    e(v) <= depth.
    """
    return reached_from(rows, v, depth) == full


def bfs_distances(g: Graph, v: int) -> List[Distance]:
    """
    Returns the shortest path length from v to every vertex.

    :param      g:    The graph.
    :type       g:    Graph
    :param      v:    The source vertex.
    :type       v:    int

    :returns:   dist[u] = d(v, u), `UNREACHABLE` if there is no path.
    :rtype:     list

    :raises     GraphError:  If v is out of range.
    """
    g.check_vertex(v)
    rows = g.adj
    dist: List[Distance] = [UNREACHABLE] * g.n
    dist[v] = 0
    reached = frontier = 1 << v
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~reached
        reached |= frontier
        for u in iter_bits(frontier):
            dist[u] = level
    return dist


def eccentricity(g: Graph, v: int) -> Distance:
    g.check_vertex(v)
    return eccentricity_of(g.adj, v, g.full)


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    """
    Computes e(v) for every vertex. Disconnected graphs are allowed and
    yield `UNREACHABLE` entries.
    """
    rows, full = g.adj, g.full
    return EccentricityProfile.from_eccentricities(
        [eccentricity_of(rows, v, full) for v in range(g.n)]
    )


def radius(g: Graph) -> Distance:
    return eccentricity_profile(g).radius


def diameter(g: Graph) -> Distance:
    return eccentricity_profile(g).diameter


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError()


def eccentric_vertices(g: Graph, v: int) -> FrozenSet[int]:
    """
    Returns the set of vertices at distance e(v) from v.

    :raises     DisconnectedGraphError:  If g is disconnected.
    """
    g.check_vertex(v)
    _require_connected(g)
    dist = bfs_distances(g, v)
    e = max(dist)
    return frozenset(u for u, d in enumerate(dist) if d == e)


def eccentric_vertex_map(g: Graph) -> Dict[int, FrozenSet[int]]:
    _require_connected(g)
    result = {}
    for v in range(g.n):
        dist = bfs_distances(g, v)
        e = max(dist)
        result[v] = frozenset(u for u, d in enumerate(dist) if d == e)
    return result


def is_self_centered(g: Graph) -> bool:
    """
    :raises     DisconnectedGraphError:  If g is disconnected.
    """
    _require_connected(g)
    return eccentricity_profile(g).self_centered


def all_pairs_distances(g: Graph) -> np.ndarray:
    """
    All-pairs hop distances by Floyd-Warshall (scipy), independent of the
    bitset BFS. Unreachable pairs are `np.inf`.
    """
    return floyd_warshall(
        csr_matrix(g.adjacency_matrix().astype(np.float64)), directed=False
    )
