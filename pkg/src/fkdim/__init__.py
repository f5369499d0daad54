"""Exact fractional and integer k-metric dimension of graphs."""

from .errors import (
    DisconnectedGraphError, DomainError, FamilySpecError, GuardError, LPStructureError,
    ParseError,
)
from .fractional import (
    DimensionResult, ResolvingFunction, build_kresolving_lp, classify_extremes,
    fractional_dimension, fractional_k_dimension, sweep_phi, verify_k_resolving,
)
from .graph import (
    DistanceMatrix, Graph, PairSystem, all_pairs_distances, is_connected, pair_system,
    parse_edge_list, r_kappa_union, resolving_set_of_pair, twin_pairs,
)
from .integer import (
    IntegerDimResult, brute_force_k_metric_dimension, k_metric_dimension, metric_dimension,
)
from .lp import LinearProgram, LPSolution, check_feasible, solve_min

__version__ = "0.1.0"

__all__ = [
    "DimensionResult", "DisconnectedGraphError", "DistanceMatrix", "DomainError",
    "FamilySpecError", "Graph", "GuardError", "IntegerDimResult", "LPSolution",
    "LPStructureError", "LinearProgram", "PairSystem", "ParseError", "ResolvingFunction",
    "all_pairs_distances", "brute_force_k_metric_dimension", "build_kresolving_lp",
    "check_feasible", "classify_extremes", "fractional_dimension", "fractional_k_dimension",
    "is_connected", "k_metric_dimension", "metric_dimension", "pair_system", "parse_edge_list",
    "r_kappa_union", "resolving_set_of_pair", "solve_min", "sweep_phi", "twin_pairs",
    "verify_k_resolving",
]
