"""Graph representation, interchange formats, generators and structure queries"""

from .graph import MAX_ORDER, DegreeSequence, Graph, VertexSet
from .formats import (
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    read_graphs,
)
from .generators import (
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    generate_named,
    path,
    petersen,
    star,
)
from .structure import (
    component_count,
    connected_components,
    cut_vertices,
    is_connected,
    is_connected_subset,
)

__all__ = [
    "MAX_ORDER",
    "DegreeSequence",
    "Graph",
    "VertexSet",
    "encode_edge_list",
    "encode_graph6",
    "parse_edge_list",
    "parse_graph6",
    "read_graphs",
    "cartesian_product",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "empty",
    "generate_named",
    "path",
    "petersen",
    "star",
    "component_count",
    "connected_components",
    "cut_vertices",
    "is_connected",
    "is_connected_subset",
]
