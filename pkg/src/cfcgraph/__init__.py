"""Conflict-free connection and vertex-connection numbers of small-diameter graphs."""

from .checker import (
    color_count,
    exists_cf_path,
    exists_cf_path_vertices,
    failing_pair_edges,
    failing_pair_vertices,
    is_cfc_coloring,
    is_conflict_free_path_edges,
    is_conflict_free_path_vertices,
    is_vcfc_coloring,
)
from .classify import (
    CfcResult,
    classify_cfc,
    classify_vcfc,
    construct_cfc_coloring,
    construct_vcfc_coloring,
    h_value,
    is_exception_structure,
)
from .errors import (
    BudgetExceededError,
    CfcError,
    ColoringError,
    DisconnectedGraphError,
    ParseError,
    RangeExhaustedError,
    ReconstructionError,
    UnresolvedIntervalError,
    UnsupportedShapeError,
)
from .families import (
    diam3_exception_graph,
    diam4_tree,
    double_star,
    star,
    three_color_family,
    two_color_family,
)
from .formats import (
    emit_edge_coloring,
    emit_edge_list,
    emit_graph6,
    emit_vertex_coloring,
    parse_edge_coloring,
    parse_edge_list,
    parse_graph6,
    parse_vertex_coloring,
    to_dot,
)
from .graph import (
    Connectivity,
    CutStructure,
    Graph,
    Metrics,
    TreeComponent,
    connectivity_predicates,
    cut_structure,
    edge_key,
    end_block_reduction,
    induced_subgraph,
    is_connected,
    is_tree,
    metrics,
)
from .solver import SolveReport, exact_cfc, exact_vcfc
from .trees import (
    Diam4TreeShape,
    cfc_tree,
    construct_tree_coloring,
    diam4_params,
    s_membership,
    s_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CfcError",
    "CfcResult",
    "ColoringError",
    "Connectivity",
    "CutStructure",
    "Diam4TreeShape",
    "DisconnectedGraphError",
    "Graph",
    "Metrics",
    "ParseError",
    "RangeExhaustedError",
    "ReconstructionError",
    "SolveReport",
    "TreeComponent",
    "UnresolvedIntervalError",
    "UnsupportedShapeError",
    "cfc_tree",
    "classify_cfc",
    "classify_vcfc",
    "color_count",
    "connectivity_predicates",
    "construct_cfc_coloring",
    "construct_tree_coloring",
    "construct_vcfc_coloring",
    "cut_structure",
    "diam3_exception_graph",
    "diam4_params",
    "diam4_tree",
    "double_star",
    "edge_key",
    "emit_edge_coloring",
    "emit_edge_list",
    "emit_graph6",
    "emit_vertex_coloring",
    "end_block_reduction",
    "exact_cfc",
    "exact_vcfc",
    "exists_cf_path",
    "exists_cf_path_vertices",
    "failing_pair_edges",
    "failing_pair_vertices",
    "h_value",
    "induced_subgraph",
    "is_cfc_coloring",
    "is_conflict_free_path_edges",
    "is_conflict_free_path_vertices",
    "is_connected",
    "is_exception_structure",
    "is_tree",
    "is_vcfc_coloring",
    "metrics",
    "parse_edge_coloring",
    "parse_edge_list",
    "parse_graph6",
    "parse_vertex_coloring",
    "s_membership",
    "s_witness",
    "star",
    "three_color_family",
    "to_dot",
    "two_color_family",
]
