"""Cartesian products and closed-form PI_v / PI_w of products.

Product vertices are labeled row-major: ``(a, b)`` in ``G x H`` becomes
``a * |V(H)| + b``. The formula functions only read per-factor invariants
(vertex count, edge count, PI_v, PI_w) and never build the product graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Sequence

from .errors import SizeTooSmall, checked, checked_mul
from .graph import Graph, require_connected
from .indices import pi_v, pi_w


class FactorInvariants(NamedTuple):
    vertices: int
    edges: int
    pi_v: int
    pi_w: int


def factor_invariants(g: Graph) -> FactorInvariants:
    return FactorInvariants(g.n, g.m, pi_v(g), pi_w(g))


@dataclass(frozen=True)
class ProductFactors:
    factors: tuple[Graph, ...]
    invariants: tuple[FactorInvariants, ...]

    @classmethod
    def of(cls, graphs: Sequence[Graph]) -> "ProductFactors":
        graphs = tuple(graphs)
        if not graphs:
            raise SizeTooSmall("a product needs at least one factor")
        for g in graphs:
            require_connected(g)
        return cls(graphs, tuple(factor_invariants(g) for g in graphs))


def _as_factors(factors) -> ProductFactors:
    return factors if isinstance(factors, ProductFactors) else ProductFactors.of(factors)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    require_connected(g)
    require_connected(h)
    nh = h.n
    checked_mul(g.n, nh)
    edges = [(a * nh + b, a * nh + c) for a in range(g.n) for b, c in h.edges()]
    edges += [(a * nh + b, c * nh + b) for a, c in g.edges() for b in range(nh)]
    return Graph.unchecked(g.n * nh, edges)


def cartesian_product_all(graphs: Sequence[Graph]) -> Graph:
    """Left fold of :func:`cartesian_product` over ``graphs``."""
    if not graphs:
        raise SizeTooSmall("a product needs at least one factor")
    return reduce(cartesian_product, graphs)


def cartesian_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise SizeTooSmall(f"power needs k >= 1, got {k}")
    return cartesian_product_all([g] * k)


def piw_product_formula(g: Graph, h: Graph) -> int:
    fg, fh = ProductFactors.of([g, h]).invariants
    return _piw_pair(fg, fh)


def _piw_pair(fg: FactorInvariants, fh: FactorInvariants) -> int:
    vg, eg, pvg, pwg = fg
    vh, eh, pvh, pwh = fh
    return checked(
        checked_mul(vg, vg, pwh)
        + checked_mul(vh, vh, pwg)
        + checked_mul(4, vg, eg, pvh)
        + checked_mul(4, vh, eh, pvg)
    )


def _prod_squares(inv: Sequence[FactorInvariants], skip: set[int]) -> int:
    return checked_mul(*(f.vertices * f.vertices for k, f in enumerate(inv) if k not in skip))


def piv_product_formula(factors) -> int:
    """PI_v of the product of all factors: sum_i PI_v(G_i) prod_{j != i} |V_j|^2."""
    inv = _as_factors(factors).invariants
    total = 0
    for i, f in enumerate(inv):
        total = checked(total + checked_mul(f.pi_v, _prod_squares(inv, {i})))
    return total


def piw_nfold_formula(factors) -> int:
    """PI_w of the product of all factors, from per-factor invariants."""
    inv = _as_factors(factors).invariants
    total = 0
    for i, f in enumerate(inv):
        total = checked(total + checked_mul(f.pi_w, _prod_squares(inv, {i})))
    for i, fi in enumerate(inv):
        for j, fj in enumerate(inv):
            if i != j:
                term = checked_mul(4, fi.pi_v, fj.vertices, fj.edges, _prod_squares(inv, {i, j}))
                total = checked(total + term)
    return total


def piw_power_formula(g: Graph, k: int) -> int:
    """PI_w of the k-th Cartesian power of ``g``."""
    if k < 1:
        raise SizeTooSmall(f"power needs k >= 1, got {k}")
    v, e, pv, pw = factor_invariants(g)
    if k == 1:
        return pw
    inner = checked(checked_mul(v, pw) + checked_mul(4, k - 1, e, pv))
    return checked_mul(k, checked(v ** (2 * k - 3)), inner)
