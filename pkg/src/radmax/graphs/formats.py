#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : formats.py
# brief   : graph6, edge list and DOT codecs
#
# author  : radmax contributors
# created : 2026-09-04 15:48:09
# changed : 2026-10-15 11:20:36
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
import re
from typing import Dict, Iterable, Mapping, Optional

import networkx as nx
import pydot

from radmax.exceptions import FormatError
from radmax.graphs.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


# function definitions ########################################################
def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """
    Converts a networkx graph; nodes are relabeled 0..n-1 in node order.
    """
    if G.is_directed() or G.is_multigraph():
        raise FormatError("only simple undirected graphs are supported")
    if any(u == v for u, v in G.edges()):
        raise FormatError("self-loops are not supported")
    index = {node: i for i, node in enumerate(G.nodes())}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in G.edges()))


def to_graph6(g: Graph, header: bool = False) -> str:
    """
    Encodes the graph in graph6 (no trailing newline).
    """
    data = nx.to_graph6_bytes(to_networkx(g), header=header)
    return data.decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    """
    Decodes a single graph6 string; an optional `>>graph6<<` header is
    accepted.

    :raises     FormatError:  If the text is not valid graph6.
    """
    s = text.strip()
    if not s:
        raise FormatError("empty graph6 string")
    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise FormatError(f"malformed graph6 {s!r}: {e}") from e
    if G.number_of_nodes() == 0:
        raise FormatError("graph6 string encodes the empty graph")
    return from_networkx(G)


def to_edgelist(g: Graph) -> str:
    """
    Plain edge list, one `u v` pair per line, preceded by a `# n=<order>`
    line so isolated vertices survive the round trip.
    """
    lines = [f"# n={g.n}"]
    lines.extend(nx.generate_edgelist(to_networkx(g), data=False))
    return "\n".join(lines) + "\n"


def from_edgelist(text: str, n: Optional[int] = None) -> Graph:
    """
    Parses an edge list. The order comes from `n`, a `# n=<order>` line,
    or the largest vertex id mentioned.
    """
    lines = text.splitlines()
    for line in lines:
        m = re.match(r"^\s*#\s*n\s*=\s*(\d+)\s*$", line)
        if m and n is None:
            n = int(m.group(1))
    try:
        G = nx.parse_edgelist(lines, nodetype=int, data=False, comments="#")
    except (TypeError, ValueError, nx.NetworkXError) as e:
        raise FormatError(f"malformed edge list: {e}") from e
    if n is None:
        n = max(G.nodes(), default=-1) + 1
    if n < 1:
        raise FormatError("edge list does not define any vertex")
    for u, v in G.edges():
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {u}-{v} outside 0..{n - 1}")
        if u == v:
            raise FormatError(f"self-loop at {u}")
    return Graph.from_edges(n, G.edges())


def to_dot(
    g: Graph,
    name: str = "G",
    node_attrs: Optional[Mapping[int, Dict[str, str]]] = None,
    edge_attrs: Optional[Mapping[tuple, Dict[str, str]]] = None,
) -> str:
    """
    Renders the graph in the DOT language through networkx's pydot bridge.
    Every vertex is declared so isolated vertices survive `from_dot`.
    """
    node_attrs = node_attrs or {}
    edge_attrs = edge_attrs or {}
    G = nx.Graph(name=name)
    G.add_nodes_from((v, dict(node_attrs.get(v, {}))) for v in range(g.n))
    G.add_edges_from((u, v, dict(edge_attrs.get((u, v), {}))) for u, v in g.edges())
    text = nx.nx_pydot.to_pydot(G).to_string()
    return text if text.endswith("\n") else text + "\n"


def _is_vertex_id(name) -> bool:
    s = str(name)
    return s.isascii() and s.isdigit()


def from_dot(text: str) -> Graph:
    """
    Parses an undirected DOT graph with pydot. Integer node ids are kept
    as vertex numbers (missing ids become isolated vertices); otherwise
    nodes are numbered in order of appearance. Attributes are ignored.

    :raises     FormatError:  On syntax errors, digraphs, parallel edges
                              or self-loops.
    """
    try:
        parsed = pydot.graph_from_dot_data(text.strip())
    except Exception as e:  # pyparsing errors
        raise FormatError(f"malformed DOT: {e}") from e
    if not parsed:
        raise FormatError("no DOT graph found")
    G = nx.nx_pydot.from_pydot(parsed[0])
    if G.is_directed():
        raise FormatError("expected an undirected DOT graph, got a digraph")
    if G.is_multigraph():
        simple = nx.Graph(G)
        if simple.number_of_edges() != G.number_of_edges():
            raise FormatError("DOT graph has parallel edges")
        G = simple
    if nx.number_of_selfloops(G):
        raise FormatError("self-loops are not supported")
    if G.number_of_nodes() == 0:
        raise FormatError("DOT graph has no vertices")
    if all(_is_vertex_id(v) for v in G):
        n = max(int(v) for v in G) + 1
        return Graph.from_edges(n, ((int(u), int(v)) for u, v in G.edges()))
    return from_networkx(G)


def parse_graph(text: str) -> Graph:
    """
    Parses graph6, DOT or an edge list, guessing the format.
    """
    s = text.strip()
    if re.match(r"^(strict\s+)?(di)?graph\b", s, re.IGNORECASE):
        return from_dot(s)
    if len(s.split()) == 1 and "\n" not in s:
        return from_graph6(s)
    return from_edgelist(s)


def dumps(g: Graph, fmt: str, **kwargs) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g, **kwargs)
    if fmt == "edgelist":
        return to_edgelist(g)
    raise FormatError(f"unknown format {fmt!r}")


FORMATS: Iterable[str] = ("graph6", "dot", "edgelist")
