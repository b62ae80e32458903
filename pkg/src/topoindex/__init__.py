"""Exact weighted vertex PI index and related topological indices."""

from .bounds import BoundReport, all_bounds
from .errors import (
    DomainError,
    IndexOverflow,
    ParseError,
    TopoIndexError,
)
from .formats import read_graph6, write_graph6
from .graph import Graph, build_graph
from .indices import (
    IndexReport,
    compute_indices,
    pi_v,
    pi_w,
    szeged,
    sz_w,
    vertex_contributions,
    wiener,
    zagreb_m1,
    zagreb_m2,
)
from .products import cartesian_product, piw_product_formula

__all__ = [
    "BoundReport", "DomainError", "Graph", "IndexOverflow", "IndexReport",
    "ParseError", "TopoIndexError", "all_bounds", "build_graph",
    "cartesian_product", "compute_indices", "pi_v", "pi_w",
    "piw_product_formula", "read_graph6", "sz_w", "szeged",
    "vertex_contributions", "wiener", "write_graph6", "zagreb_m1", "zagreb_m2",
]
__version__ = "0.1.0"
