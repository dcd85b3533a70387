"""Turán numbers for digraphs avoiding t+1 directed 2-paths with common endpoints."""

from p2turan.digraph import Digraph, VertexSet
from p2turan.freeness import (
    Witness,
    find_witness,
    is_free,
    is_free_naive,
    max_path2,
    path2_count,
)
from p2turan.formulas import ExBounds, ex_bounds, g, phi, theorem_threshold
from p2turan.constructions import PartitionSpec, build_extremal

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "VertexSet",
    "Witness",
    "find_witness",
    "is_free",
    "is_free_naive",
    "max_path2",
    "path2_count",
    "ExBounds",
    "ex_bounds",
    "g",
    "phi",
    "theorem_threshold",
    "PartitionSpec",
    "build_extremal",
    "__version__",
]
