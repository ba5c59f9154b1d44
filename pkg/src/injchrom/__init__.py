"""Exact injective chromatic numbers, graph families, and bound verification.

The injective chromatic number of ``G`` is the chromatic number of the graph
joining two vertices whenever they share a neighbour.  This package computes
it exactly, builds the families of planar graphs that attain the conjectured
upper bounds, and checks the bounds over exhaustive small-order streams.
"""

from .codec import Graph6Error, parse_graph6, read_stream, to_graph6_str, write_graph6
from .conjectures import chen_bound, girth5_bound, la_storgel_bound, luzar_bound, verdict
from .graphcore import Graph, GraphError
from .injsolver import (
    BudgetExhausted,
    Coloring,
    SolveResult,
    greedy_upper_bound,
    injective_chromatic_number,
    injective_k_colorable,
    lower_bound,
    verify_injective,
)
from .metrics import (
    conflict_graph,
    diameter,
    every_edge_on_triangle,
    girth,
    is_planar,
    vertex_connectivity_at_least,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "parse_graph6",
    "write_graph6",
    "to_graph6_str",
    "read_stream",
    "Coloring",
    "SolveResult",
    "BudgetExhausted",
    "injective_chromatic_number",
    "injective_k_colorable",
    "verify_injective",
    "lower_bound",
    "greedy_upper_bound",
    "conflict_graph",
    "girth",
    "diameter",
    "is_planar",
    "vertex_connectivity_at_least",
    "every_edge_on_triangle",
    "chen_bound",
    "luzar_bound",
    "la_storgel_bound",
    "girth5_bound",
    "verdict",
]
