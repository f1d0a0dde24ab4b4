"""Minimum selective subsets on vertex-colored graphs."""

from .blocks import Block, boundary_sets, decompose_blocks
from .errors import BudgetExceeded, ConsistencyError, GuardExceeded, ParseError, SelsubError
from .exact import (
    SolveResult,
    enumerate_oracle,
    exact_block_cover,
    exact_dominating_set,
    exact_mss,
    local_min_selective,
)
from .graph import (
    INF,
    ColoredGraph,
    closed_neighborhood,
    connected_components,
    hop_distance,
    nearest_neighbors,
    set_distance,
)
from .greedy import greedy_mss
from .instance import Instance, dump_instance, load_instance
from .ptas import PtasConfig, d_bound, ptas_mss
from .validator import Verdict, covers_boundary, is_selective_subset

__all__ = [
    "INF", "Block", "BudgetExceeded", "ColoredGraph", "ConsistencyError", "GuardExceeded",
    "Instance", "ParseError", "PtasConfig", "SelsubError", "SolveResult", "Verdict",
    "boundary_sets", "closed_neighborhood", "connected_components", "covers_boundary",
    "d_bound", "decompose_blocks", "dump_instance", "enumerate_oracle", "exact_block_cover",
    "exact_dominating_set", "exact_mss", "greedy_mss", "hop_distance", "is_selective_subset",
    "load_instance", "local_min_selective", "nearest_neighbors", "ptas_mss", "set_distance",
]
