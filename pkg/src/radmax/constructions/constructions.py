#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : constructions.py
# brief   : Radially maximal graph families and the extension operator
#
# author  : radmax contributors
# created : 2026-09-08 13:37:22
# changed : 2026-10-17 10:05:44
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
import enum
import logging
from dataclasses import dataclass, field
from typing import Dict

from radmax.exceptions import (
    DisconnectedGraphError,
    InfeasibleParametersError,
    UnsupportedOrderError,
)
from radmax.graphs import Graph, eccentric_vertex_map, eccentricity_profile

logger = logging.getLogger(__name__)


class Feasibility(enum.Enum):
    SELF_CENTERED = "self-centered"
    NON_SELF_CENTERED = "non-self-centered"
    INFEASIBLE = "infeasible-by-theorem"
    UNSUPPORTED_ORDER = "unsupported-order"


@dataclass(frozen=True)
class ConstructionParams:
    """
    A (radius, diameter, order) request.

    Radially maximal graphs satisfy r <= d <= 2r - 2. Within that range a
    graph is built for n >= 2r (d = r) and for n >= 3r - 1 (d > r).
    """

    r: int
    d: int
    n: int

    @property
    def feasibility(self) -> Feasibility:
        if not self.r <= self.d <= 2 * self.r - 2:
            return Feasibility.INFEASIBLE
        if self.n < self.floor:
            return Feasibility.UNSUPPORTED_ORDER
        if self.d == self.r:
            return Feasibility.SELF_CENTERED
        return Feasibility.NON_SELF_CENTERED

    @property
    def floor(self) -> int:
        """Smallest order the constructions reach for this (r, d)."""
        return 2 * self.r if self.d == self.r else 3 * self.r - 1

    @property
    def feasible(self) -> bool:
        return self.feasibility in (
            Feasibility.SELF_CENTERED,
            Feasibility.NON_SELF_CENTERED,
        )

    def check(self) -> None:
        """
        Raises if no graph is built for these parameters.

        :raises     InfeasibleParametersError:  If d lies outside [r, 2r-2].
        :raises     UnsupportedOrderError:      If n is below 2r (d = r) or
                                                3r-1 (d > r).
        """
        r, d, n = self.r, self.d, self.n
        if d < r:
            raise InfeasibleParametersError(
                f"d={d} < r={r}: the diameter is never smaller than the radius",
                inequality="r <= d",
            )
        if d > 2 * r - 2:
            raise InfeasibleParametersError(
                f"d={d} > 2r-2={2 * r - 2}: radially maximal graphs "
                f"satisfy r <= d <= 2r-2",
                inequality="d <= 2r-2",
            )
        if n < self.floor:
            kind = "self-centered" if d == r else "non-self-centered"
            expr = "2r" if d == r else "3r-1"
            raise UnsupportedOrderError(
                f"n={n} < {expr}={self.floor}: {kind} constructions "
                f"start at order {expr}",
                floor=self.floor,
            )


def classify(r: int, d: int, n: int) -> Feasibility:
    return ConstructionParams(r, d, n).feasibility


@dataclass(frozen=True)
class LabeledConstruction:
    """
    A constructed graph together with the names of its vertices: `x1`,
    `x2`, ... for the cycle, `y1`, ... for the attached vertices and
    `<name>'<k>` for the k-th extension copy of a vertex.
    """

    graph: Graph
    labels: Dict[str, int] = field(default_factory=dict, hash=False)

    def __getitem__(self, label: str) -> int:
        return self.labels[label]

    def names(self) -> Dict[int, str]:
        return {v: k for k, v in self.labels.items()}

    def summary(self) -> dict:
        profile = eccentricity_profile(self.graph)
        return {
            "order": self.graph.n,
            "size": self.graph.edge_count(),
            "radius": profile.radius,
            "diameter": profile.diameter,
            "labels": dict(sorted(self.labels.items(), key=lambda kv: kv[1])),
        }


# function definitions ########################################################
def extend(g: Graph, v: int) -> Graph:
    """
    The extension G{v}: adds a vertex v' = n adjacent to v and to every
    neighbour of v. For connected g of order >= 2 all old eccentricities
    are kept and e(v') = e(v).

    :raises     GraphError:  If v is out of range.
    """
    g.check_vertex(v)
    n = g.n
    new = n
    row_new = g.adj[v] | (1 << v)
    rows = [row | (1 << new) if row_new >> u & 1 else row for u, row in enumerate(g.adj)]
    rows.append(row_new)
    return Graph(n + 1, rows)


def extend_many(g: Graph, v: int, times: int) -> Graph:
    for _ in range(times):
        g = extend(g, v)
    return g


def _extend_labeled(c: LabeledConstruction, label: str, times: int) -> LabeledConstruction:
    v = c.labels[label]
    g = c.graph
    labels = dict(c.labels)
    copies = sum(1 for k in labels if k.startswith(label + "'"))
    for k in range(times):
        labels[f"{label}'{copies + k + 1}"] = g.n
        g = extend(g, v)
    return LabeledConstruction(graph=g, labels=labels)


def x_label(k: int, r: int) -> str:
    """
    Name of the cycle vertex x_k of H(r, d, 3r-1) with the subscript
    reduced modulo 2r-1 into 1..2r-1.
    """
    m = 2 * r - 1
    return f"x{(k - 1) % m + 1}"


def build_self_centered(r: int, n: int) -> LabeledConstruction:
    """
    G(r, n): the cycle C_2r extended n - 2r times at x1. Self-centered of
    radius r and radially maximal.

    :raises     InfeasibleParametersError:  If r < 2.
    :raises     UnsupportedOrderError:      If n < 2r.
    """
    if r < 2:
        raise InfeasibleParametersError(
            f"r={r} < 2: no self-centered radially maximal graph", inequality="r >= 2"
        )
    ConstructionParams(r, r, n).check()
    base = LabeledConstruction(
        graph=Graph.cycle(2 * r),
        labels={f"x{i}": i - 1 for i in range(1, 2 * r + 1)},
    )
    logger.debug("G(%d,%d): %d extensions at x1", r, n, n - 2 * r)
    return _extend_labeled(base, "x1", n - 2 * r)


def build_H(r: int, d: int) -> LabeledConstruction:
    """
    H(r, d, 3r-1): the odd cycle x1..x_{2r-1} with y-vertices attached.

    Edges: x_i x_{i+1} (x_2r = x_1), x_{2r-1} y_1, x_{2r-2j+2} y_j for
    j = 1..2r-d, x_{d-r+1} y_{2r-d+1} and the path y_t y_{t+1} for
    t = 2r-d+1..r-1 when d >= r+2. Labels: x_i -> i-1, y_j -> 2r-2+j.

    :param      r:    The radius, at least 3.
    :type       r:    int
    :param      d:    The diameter, r < d <= 2r-2.
    :type       d:    int

    :returns:   The labeled graph of radius r, diameter d and order 3r-1.
    :rtype:     LabeledConstruction

    :raises     InfeasibleParametersError:  If (r, d) is outside the range.
    """
    if not r < d <= 2 * r - 2:
        if d <= r:
            raise InfeasibleParametersError(
                f"H(r,d) needs r < d, got r={r}, d={d}", inequality="r < d"
            )
        raise InfeasibleParametersError(
            f"d={d} > 2r-2={2 * r - 2}: radially maximal graphs satisfy "
            f"r <= d <= 2r-2",
            inequality="d <= 2r-2",
        )

    cycle = 2 * r - 1

    def x(i: int) -> int:
        if i == 2 * r:
            i = 1
        assert 1 <= i <= cycle, f"x_{i} outside the cycle"
        return i - 1

    def y(j: int) -> int:
        assert 1 <= j <= r, f"y_{j} outside 1..{r}"
        return cycle + j - 1

    edges = [(x(i), x(i + 1)) for i in range(1, cycle + 1)]
    edges.append((x(cycle), y(1)))
    edges.extend((x(2 * r - 2 * j + 2), y(j)) for j in range(1, 2 * r - d + 1))
    edges.append((x(d - r + 1), y(2 * r - d + 1)))
    if d >= r + 2:
        edges.extend((y(t), y(t + 1)) for t in range(2 * r - d + 1, r))

    labels = {f"x{i}": i - 1 for i in range(1, cycle + 1)}
    labels.update({f"y{j}": cycle + j - 1 for j in range(1, r + 1)})
    return LabeledConstruction(graph=Graph.from_edges(3 * r - 1, edges), labels=labels)


def build_radially_maximal(params: ConstructionParams) -> LabeledConstruction:
    """
    Builds a radially maximal graph of radius r, diameter d and order n.
    For d > r this is H(r, d, 3r-1) extended n - 3r + 1 times at
    x_{2r-2}.

    :raises     InfeasibleParametersError:  If d lies outside [r, 2r-2].
    :raises     UnsupportedOrderError:      If n is below the order floor.
    """
    params.check()
    r, d, n = params.r, params.d, params.n
    if d == r:
        return build_self_centered(r, n)
    h = build_H(r, d)
    logger.debug("H(%d,%d,%d): %d extensions at x%d", r, d, n, n - h.graph.n, 2 * r - 2)
    return _extend_labeled(h, f"x{2 * r - 2}", n - h.graph.n)


def lemma1_precondition(g: Graph, v: int) -> bool:
    """
    True iff v is not an eccentric vertex of any central vertex of g. For
    radially maximal g such a v may be extended without losing radial
    maximality.

    :raises     DisconnectedGraphError:  If g is disconnected.
    """
    g.check_vertex(v)
    if not g.is_connected():
        raise DisconnectedGraphError()
    center = eccentricity_profile(g).center
    eccentric = eccentric_vertex_map(g)
    return all(v not in eccentric[c] for c in center)
