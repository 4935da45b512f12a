"""Heuristic treedepth decompositions: greedy orderings plus divide and conquer on balanced cuts."""

from .decomposition import Decomposition, Ordering, build_from_ordering, ordering_from_parents, verify_decomposition
from .graph import Graph, components, induced_subgraph, parse_gr, read_gr, td_lower_bound
from .greedy import ScoreParams, greedy_build, greedy_build_lookahead, greedy_eliminate, greedy_superfast
from .solver import Budget, Incumbent, solve

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "Decomposition",
    "Graph",
    "Incumbent",
    "Ordering",
    "ScoreParams",
    "build_from_ordering",
    "components",
    "greedy_build",
    "greedy_build_lookahead",
    "greedy_eliminate",
    "greedy_superfast",
    "induced_subgraph",
    "ordering_from_parents",
    "parse_gr",
    "read_gr",
    "solve",
    "td_lower_bound",
    "verify_decomposition",
]
