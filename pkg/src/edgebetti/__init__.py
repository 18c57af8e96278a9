"""Multi-graded Betti numbers of normal edge rings.

Closed-form Betti tables for compact, multi-path, and two-ear graphs, with
an independent homological oracle over squarefree divisor complexes.
"""

from .degrees import Multidegree, big_d, divides, subtract, theta
from .graphs import (
    CompactA,
    CompactB,
    CompactC,
    CompleteBipartite2d,
    Custom,
    LabeledGraph,
    MultiPath,
    OneEar,
    TwoEar,
    build_family,
    classify,
    family_subgraph_census,
    induced_subgraph,
    minimal_cycles,
    odd_cycle_condition,
    pdim,
)

__all__ = [
    "Multidegree", "big_d", "divides", "subtract", "theta",
    "CompactA", "CompactB", "CompactC", "CompleteBipartite2d", "Custom",
    "LabeledGraph", "MultiPath", "OneEar", "TwoEar",
    "build_family", "classify", "family_subgraph_census", "induced_subgraph",
    "minimal_cycles", "odd_cycle_condition", "pdim",
]
