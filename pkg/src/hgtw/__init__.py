"""Treewidth analysis toolkit for linear hypergraphs: exact solvers for
the 2-section and line-graph widths, closed-form bounds, and
width-controlled decomposition conversions."""

from .core import (
    Hypergraph,
    HypergraphStats,
    SigmaProfile,
    avg_rank_after_removal,
    build_hypergraph,
    is_linear,
    is_minimal,
    sigma_counts,
    stats,
)
from .derive import (
    BijectionWitness,
    Graph,
    dual,
    line_graph,
    linear_cover,
    make_graph,
    two_section,
    witness_dual_is_line_graph,
    witness_two_section_is_dual_line_graph,
)
from .decomp import (
    LeafBasedDecomposition,
    SupertreeDecomposition,
    TreeDecomposition,
    check_leaf_based,
    normalize_leaf_based,
    validate_std,
    validate_td,
)
from .solve import (
    WidthResult,
    brute_force_treewidth,
    exact_treewidth,
    supertree_width,
)
from .bounds import (
    BoundsReport,
    BoundValue,
    anti_rank_lower_bound_deg2,
    anti_rank_lower_bound_deg3,
    avg_rank_lower_bound,
    bounds_report,
    elementary_bounds,
    envelope_candidates,
    regular_lower_bound,
    sandwich_ok,
    stw_rank_upper_bound,
)
from .transform import (
    find_splitting_edge,
    hypergraph_supertree_from_td,
    supertree_to_td,
    td_to_supertree,
)
from .families import (
    cycle_power,
    cycle_power_dual,
    graph_dual,
    path_power,
    path_power_dual,
    random_linear,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
