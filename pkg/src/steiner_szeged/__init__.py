"""Exact Steiner Szeged, revised Szeged and Steiner Wiener indices of small graphs."""

from .graph_core import (
    CapError,
    FamilySpec,
    Graph,
    GraphError,
    ParseError,
    complete,
    complete_multipartite,
    connected_graphs,
    cycle,
    emit_graph6,
    enumerate_trees,
    generate,
    is_connected,
    parse_edgelist,
    parse_graph6,
    path,
    paw,
    pendant_edge_count,
    star,
    vertex_connectivity,
)
from .steiner import (
    SteinerTable,
    all_pairs_distances,
    build_table,
    steiner_distance,
    steiner_distance_oracle,
    steiner_wiener,
)
from .symmetry import automorphisms, edge_orbits, rsz_k_via_orbits, sz_k_via_orbits
from .szeged import (
    EdgeClassification,
    Quarter,
    classical_revised_szeged,
    classical_szeged,
    classify_edge,
    rsz_k,
    sz_k,
)

__version__ = "0.1.0"
