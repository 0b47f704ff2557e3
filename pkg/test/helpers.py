import os

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from radmax.graphs import Graph

LONG_TESTS = os.environ.get("RADMAX_LONG_TESTS", "") not in ("", "0")

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)


@st.composite
def graphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_mask(n, mask)


def connected_graphs(min_order=2, max_order=8):
    return graphs(min_order, max_order).filter(lambda g: g.is_connected())


def feasible_pairs(max_radius=8):
    """(r, d) with r < d <= 2r-2, the parameters of H(r, d)."""
    for r in range(3, max_radius + 1):
        for d in range(r + 1, 2 * r - 1):
            yield r, d


def floyd_warshall_oracle(g):
    """Plain numpy Floyd-Warshall, independent of radmax."""
    n = g.n
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0)
    for u, v in g.edges():
        dist[u, v] = dist[v, u] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return dist


def graph6_oracle(n, edges):
    """Reference graph6 encoder for n <= 62."""
    pairs = [(i, j) for j in range(n) for i in range(j)]
    present = {tuple(sorted(e)) for e in edges}
    bits = [1 if p in present else 0 for p in pairs]
    bits += [0] * (-len(bits) % 6)
    out = chr(n + 63)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out += chr(value + 63)
    return out
