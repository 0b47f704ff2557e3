from .graph import Graph, pair_order
from .eccentricity import (
    UNREACHABLE,
    EccentricityProfile,
    all_pairs_distances,
    bfs_distances,
    eccentric_vertex_map,
    eccentric_vertices,
    eccentricity,
    eccentricity_profile,
    is_self_centered,
)
from .formats import (
    FORMATS,
    dumps,
    from_dot,
    from_edgelist,
    from_graph6,
    parse_graph,
    to_dot,
    to_edgelist,
    to_graph6,
)
