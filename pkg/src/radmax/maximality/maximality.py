#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : maximality.py
# brief   : Radial maximality decision procedure and witness certificates
#
# author  : radmax contributors
# created : 2026-09-10 16:02:19
# changed : 2026-10-17 15:48:30
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
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from radmax.exceptions import (
    DisconnectedGraphError,
    GraphError,
    NotRadiallyMaximalError,
)
from radmax.graphs import Graph
from radmax.graphs.graph import iter_bits
from radmax.graphs.eccentricity import UNREACHABLE, eccentricity_of, within

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class CertificateEntry:
    edge: Edge
    witness: int
    new_ecc: int


@dataclass(frozen=True)
class MaximalityCertificate:
    """
    One entry per non-edge uv: a witness z with e_{G+uv}(z) < radius.
    Each entry can be rechecked with a single BFS.
    """

    radius: int
    entries: Tuple[CertificateEntry, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "entries": [
                {"edge": list(e.edge), "witness": e.witness, "new_ecc": e.new_ecc}
                for e in self.entries
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "MaximalityCertificate":
        return cls(
            radius=int(data["radius"]),
            entries=tuple(
                CertificateEntry(
                    edge=(int(e["edge"][0]), int(e["edge"][1])),
                    witness=int(e["witness"]),
                    new_ecc=int(e["new_ecc"]),
                )
                for e in data["entries"]
            ),
        )


# function definitions ########################################################
def _connected_radius(g: Graph) -> int:
    rows, full = g.adj, g.full
    ecc = [eccentricity_of(rows, v, full) for v in range(g.n)]
    r = min(ecc)
    if max(ecc) == UNREACHABLE:
        raise DisconnectedGraphError(
            "graph is disconnected; radial maximality needs a finite radius"
        )
    return r


def _witness(rows: Sequence[int], bound: int, full: int) -> Optional[int]:
    """Smallest vertex z with e(z) <= bound, or None."""
    if bound < 0:
        return None
    for z in range(len(rows)):
        if within(rows, z, bound, full):
            return z
    return None


def radius_keeping_pair(rows: Sequence[int], radius: int, full: int) -> Optional[Edge]:
    """
    Rows-level scan behind `find_counterexample_edge`; `radius` must be the
    radius of the graph given by `rows`.
    """
    rows = list(rows)
    for u in range(len(rows)):
        missing = (full & ~rows[u]) >> (u + 1)
        for k in iter_bits(missing):
            v = u + 1 + k
            ru, rv = rows[u], rows[v]
            rows[u] = ru | (1 << v)
            rows[v] = rv | (1 << u)
            found = _witness(rows, radius - 1, full)
            rows[u], rows[v] = ru, rv
            if found is None:
                return u, v
    return None


def find_counterexample_edge(g: Graph) -> Optional[Edge]:
    """
    Returns the first non-edge (in `Graph.non_edges` order) whose addition
    does not decrease the radius, or None if every addition does.

    :raises     DisconnectedGraphError:  If g is disconnected.
    """
    return radius_keeping_pair(g.adj, _connected_radius(g), g.full)


def is_radially_maximal(g: Graph) -> bool:
    """
    True iff g is not complete and adding any non-edge decreases its
    radius. Stops at the first non-edge that keeps the radius.

    :param      g:    A connected graph.
    :type       g:    Graph

    :raises     DisconnectedGraphError:  If g is disconnected.
    """
    if g.is_complete():
        return False
    return find_counterexample_edge(g) is None


def certificate(g: Graph) -> MaximalityCertificate:
    """
    Builds the full certificate: for each non-edge uv the smallest vertex
    z with e_{G+uv}(z) < rad(G), together with that eccentricity.

    :raises     DisconnectedGraphError:   If g is disconnected.
    :raises     NotRadiallyMaximalError:  If g is complete or some non-edge
                                          keeps the radius.
    """
    r = _connected_radius(g)
    if g.is_complete():
        raise NotRadiallyMaximalError("complete graphs are not radially maximal")
    rows, full = list(g.adj), g.full
    entries: List[CertificateEntry] = []
    for u, v in g.non_edges():
        ru, rv = rows[u], rows[v]
        rows[u] = ru | (1 << v)
        rows[v] = rv | (1 << u)
        z = _witness(rows, r - 1, full)
        if z is None:
            raise NotRadiallyMaximalError(
                f"adding {u}-{v} keeps the radius at {r}", edge=(u, v)
            )
        entries.append(CertificateEntry((u, v), z, eccentricity_of(rows, z, full)))
        rows[u], rows[v] = ru, rv
    logger.debug("certificate with %d entries, radius %d", len(entries), r)
    return MaximalityCertificate(radius=r, entries=tuple(entries))


def validate_certificate(g: Graph, cert: MaximalityCertificate) -> bool:
    """
    Independently rechecks a certificate against g: it must cover every
    non-edge exactly once and every entry must reproduce its eccentricity
    below the radius of g.
    """
    try:
        r = _connected_radius(g)
    except DisconnectedGraphError:
        return False
    if cert.radius != r or not cert.entries:
        return False
    if sorted(e.edge for e in cert.entries) != sorted(g.non_edges()):
        return False
    for e in cert.entries:
        try:
            t = g.add_edge(*e.edge)
            t.check_vertex(e.witness)
        except GraphError:
            return False
        ecc = eccentricity_of(t.adj, e.witness, t.full)
        if ecc != e.new_ecc or not ecc < r:
            return False
    return True


def radial_saturation(g: Graph) -> Graph:
    """
    Greedily adds non-edges that keep the radius until none is left. The
    result is a radially maximal spanning supergraph with the same radius
    (not necessarily one with the fewest added edges).

    :raises     DisconnectedGraphError:  If g is disconnected.
    :raises     GraphError:              If rad(g) = 1; every proper
                                         supergraph keeps radius 1.
    """
    r = _connected_radius(g)
    if r < 2:
        raise GraphError("graphs of radius 1 have no radially maximal supergraph")
    rows, full = list(g.adj), g.full
    added = 0
    # a rejected pair stays rejected once more edges are added
    for u, v in g.non_edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if _witness(rows, r - 1, full) is None:
            added += 1
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
    logger.info("saturation added %d edges at radius %d", added, r)
    return Graph(g.n, rows)
