"""Solver toolkit for the minimum global dominating set problem."""

from .bounds import BoundsReport, bounds, lower_bound, upper_bound
from .exact import (
    PriorityList,
    SolveResult,
    bgds,
    brute_force_gamma,
    brute_force_gamma_g,
    build_priority_list,
    next_candidate,
)
from .graph import (
    Graph,
    GraphMetrics,
    VertexSet,
    build_graph,
    is_dominating,
    is_global_dominating,
    metrics,
    private_neighbors,
)
from .heuristics import (
    HEURISTICS,
    DominationState,
    HeuristicTrace,
    best_initial_pair,
    gad,
    gad_pair,
    h1,
    h1_modified,
    h2,
    h3,
    h3_modified,
    run_heuristic,
)
from .ilp import IlpModel, build_model, export_lp
from .instances import (
    InstanceMeta,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_random,
    gen_rooted_product,
    gen_rooted_star_family,
    gen_star,
    gen_two_star_family,
    parse_auto,
    parse_dimacs,
    parse_edge_list,
    write_edge_list,
)
from .purify import PurifyReport, purify

__version__ = "0.1.0"
