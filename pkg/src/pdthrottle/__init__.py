"""Exact power domination, propagation time and power throttling."""

from .graph import Graph, GraphError, VertexSet, build_graph, parse_edge_list, read_graph
from .propagation import INFINITY, PropagationTrace, propagate
from .solvers import (
    ThrottlingResult,
    domination_number,
    power_domination_number,
    product_throttling,
    pt_pd,
    pt_pd_k,
    sum_throttling,
)

__all__ = [
    "Graph", "GraphError", "VertexSet", "build_graph", "parse_edge_list", "read_graph",
    "INFINITY", "PropagationTrace", "propagate", "ThrottlingResult", "domination_number",
    "power_domination_number", "product_throttling", "pt_pd", "pt_pd_k", "sum_throttling",
]

__version__ = "0.1.0"
