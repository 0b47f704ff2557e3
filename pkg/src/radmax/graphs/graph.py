#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : graph.py
# brief   : Undirected simple graph on bitset adjacency rows
#
# author  : radmax contributors
# created : 2026-09-02 11:05:17
# changed : 2026-10-16 14:22:48
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
import itertools
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from radmax import config
from radmax.exceptions import GraphError, OrderCapError

Edge = Tuple[int, int]

# n! relabelings are materialised by `canonical_mask`
CANONICAL_MAX_ORDER = 9


# function definitions ########################################################
@lru_cache(maxsize=None)
def pair_order(n: int) -> Tuple[Edge, ...]:
    """
    Vertex pairs in graph6 (column-major upper triangle) order:
    (0,1), (0,2), (1,2), (0,3), ...

    Bit k of an edge mask refers to `pair_order(n)[k]`.
    """
    return tuple((i, j) for j in range(n) for i in range(j))


def rows_from_mask(n: int, mask: int) -> List[int]:
    pairs = pair_order(n)
    rows = [0] * n
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        mask ^= low
    return rows


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class Graph:
    """
    Finite simple undirected graph on the vertices 0..n-1.

    Every adjacency row is an integer used as an n-bit set: bit u of
    `adj[v]` is set iff uv is an edge. Instances are immutable; operations
    that change the edge set return a new graph.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Iterable[int] = None):
        """
        Constructs a new graph.

        :param      n:    The order (number of vertices), at least 1.
        :type       n:    int
        :param      adj:  The adjacency rows as bitsets. Defaults to the
                          edgeless graph.
        :type       adj:  Iterable[int]

        :raises     OrderCapError:  If n exceeds `config.max_order()`.
        :raises     GraphError:     If the rows are not symmetric and
                                    irreflexive.
        """
        if n < 1:
            raise GraphError(f"graph order must be at least 1, got {n}")
        cap = config.max_order()
        if n > cap:
            raise OrderCapError(n, cap)
        rows = (0,) * n if adj is None else tuple(int(a) for a in adj)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} refers to vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at {v}-{u}")
        self._n = n
        self._adj = rows

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g._n = n
        g._adj = tuple(rows)
        return g

    # constructors ###########################################################
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """
        Builds a graph from an edge list.

        :raises     GraphError:  On self-loops, duplicate edges or vertices
                                 out of range.
        """
        if n < 1:
            raise GraphError(f"graph order must be at least 1, got {n}")
        rows = [0] * n
        for u, v in edges:
            cls._check_pair(n, u, v)
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """
        Builds a graph from an upper-triangle edge mask in `pair_order`.
        """
        if mask < 0 or mask >> (n * (n - 1) // 2):
            raise GraphError(f"edge mask {mask} out of range for order {n}")
        return cls(n, rows_from_mask(n, mask))

    @classmethod
    def from_adjacency_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError(f"adjacency matrix must be square, got {a.shape}")
        rows = [
            sum(1 << int(u) for u in np.flatnonzero(a[v]))
            for v in range(a.shape[0])
        ]
        return cls(a.shape[0], rows)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, (full & ~(1 << v) for v in range(n)))

    # accessors ##############################################################
    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def full(self) -> int:
        """Bitset containing every vertex."""
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count()})"

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range 0..{self._n - 1}")

    @staticmethod
    def _check_pair(n: int, u: int, v: int) -> None:
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphError(f"vertex {w} out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} requested")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def neighbourhood(self, v: int) -> frozenset:
        self.check_vertex(v)
        return frozenset(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return bin(self._adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [bin(row).count("1") for row in self._adj]

    def edges(self) -> Iterator[Edge]:
        """
        Yields every edge once as (u, v) with u < v, ordered by u then v.
        """
        for u, row in enumerate(self._adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def non_edges(self) -> Iterator[Edge]:
        """
        Yields every unordered pair absent from the edge set once, as
        (u, v) with u < v, ordered by u then v. These are the edges of the
        complement.
        """
        full = self.full
        for u, row in enumerate(self._adj):
            missing = (full & ~row) >> (u + 1)
            for v in iter_bits(missing):
                yield u, u + 1 + v

    def is_complete(self) -> bool:
        full = self.full
        return all(row | (1 << v) == full for v, row in enumerate(self._adj))

    def is_connected(self) -> bool:
        return reached_from(self._adj, 0) == self.full

    # derived graphs #########################################################
    def add_edge(self, u: int, v: int) -> "Graph":
        """
        Returns a copy of the graph with the edge uv added.

        :raises     GraphError:  On self-loops, vertices out of range, or if
                                 uv is already an edge.
        """
        self._check_pair(self._n, u, v)
        if self._adj[u] >> v & 1:
            raise GraphError(f"duplicate edge {u}-{v}")
        rows = list(self._adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self._n, rows)

    def complement(self) -> "Graph":
        full = self.full
        return Graph._trusted(
            self._n, [full & ~row & ~(1 << v) for v, row in enumerate(self._adj)]
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """
        Returns the isomorphic graph in which old vertex v is called
        `perm[v]`.
        """
        if sorted(perm) != list(range(self._n)):
            raise GraphError(f"{list(perm)} is not a permutation of 0..{self._n - 1}")
        rows = [0] * self._n
        for v, row in enumerate(self._adj):
            rows[perm[v]] = sum(1 << perm[u] for u in iter_bits(row))
        return Graph._trusted(self._n, rows)

    # encodings ##############################################################
    def to_mask(self) -> int:
        mask = 0
        for k, (i, j) in enumerate(pair_order(self._n)):
            if self._adj[i] >> j & 1:
                mask |= 1 << k
        return mask

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    def canonical_mask(self) -> int:
        """
        Returns the minimum edge mask over all n! relabelings of the graph.
        Two graphs are isomorphic iff their canonical masks agree.

        :raises     GraphError:  For orders above CANONICAL_MAX_ORDER.
        """
        n = self._n
        if n > CANONICAL_MAX_ORDER:
            raise GraphError(
                f"canonical form needs all {n}! relabelings; "
                f"supported up to order {CANONICAL_MAX_ORDER}"
            )
        if n == 1:
            return 0
        a = self.adjacency_matrix()
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
        rows, cols = np.array(pair_order(n), dtype=np.intp).T
        bits = a[perms[:, rows], perms[:, cols]].astype(np.int64)
        weights = np.left_shift(np.int64(1), np.arange(len(rows), dtype=np.int64))
        return int((bits @ weights).min())


def reached_from(rows: Sequence[int], v: int, depth: int = None) -> int:
    """
    Returns the bitset of vertices at distance at most `depth` from v
    (everything reachable if depth is None).
    """
    reached = frontier = 1 << v
    level = 0
    while frontier and (depth is None or level < depth):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~reached
        reached |= frontier
        level += 1
    return reached
