"""Exact computation of Ramsey numbers of trails.

A trail is a walk with no repeated edge; vertices count with multiplicity.
The package computes, for the class of k-vertex trails, the diagonal Ramsey
number by exhaustive search over small graphs, constructs and verifies
lower-bound witness graphs, and turns the constructive upper-bound argument
into an algorithm that finds a k-vertex trail in any k-vertex graph or its
complement.
"""

__version__ = "0.1.0"

from .graph import EulerClass, EulerKind, Graph, complement, euler_classify, trail_edge_upper_bound
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .trails import (
    Trail,
    TrailResult,
    eulerian_trail,
    find_long_trail,
    has_long_trail,
    longest_trail,
    pair_trail_count,
)
from .enumeration import RamseyTable, enumerate_graphs, min_pair_trail_count, ramsey_table

__all__ = [
    "EulerClass",
    "EulerKind",
    "Graph",
    "Graph6Error",
    "RamseyTable",
    "Trail",
    "TrailResult",
    "complement",
    "decode_graph6",
    "encode_graph6",
    "enumerate_graphs",
    "euler_classify",
    "eulerian_trail",
    "find_long_trail",
    "has_long_trail",
    "longest_trail",
    "min_pair_trail_count",
    "pair_trail_count",
    "ramsey_table",
    "trail_edge_upper_bound",
]
