"""Lower and upper bounds on PI_w with their equality characterizations.

Every verdict is exact: bounds are compared by integer cross-multiplication
and reported as :class:`fractions.Fraction`. Membership in an equality class
(paths, complete bipartite graphs, balanced Turan graphs, balanced complete
tripartite graphs) is decided structurally rather than by isomorphism search.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError
from .graph import Graph, diameter, edge_stats, require_connected, triangle_total
from .indices import pi_w

LOWER, UPPER = "lower", "upper"


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    direction: str
    bound_value: Fraction
    index_value: int
    holds: bool
    equality: bool
    expected_equality_class: str
    in_expected_class: bool

    @property
    def matches_expected_class(self) -> bool:
        """Equality occurs exactly when the graph is in the predicted class."""
        return self.equality == self.in_expected_class

    def to_dict(self) -> dict:
        return {
            "bound_name": self.bound_name,
            "direction": self.direction,
            "bound_value": {
                "numerator": self.bound_value.numerator,
                "denominator": self.bound_value.denominator,
            },
            "index_value": self.index_value,
            "holds": self.holds,
            "equality": self.equality,
            "expected_equality_class": self.expected_equality_class,
            "in_expected_class": self.in_expected_class,
            "matches_expected_class": self.matches_expected_class,
        }


def _report(name, direction, bound: Fraction, value: int, klass: str, member: bool) -> BoundReport:
    holds = value >= bound if direction == LOWER else value <= bound
    return BoundReport(name, direction, bound, value, holds, value == bound, klass, member)


# -- structural class tests ------------------------------------------------

def is_path(g: Graph) -> bool:
    if not g.is_connected() or g.m != g.n - 1:
        return False
    return g.n == 1 or Counter(g.degrees()) == Counter({1: 2, 2: g.n - 2})


def multipartite_parts(g: Graph) -> list[int] | None:
    """Part sizes if ``g`` is complete multipartite, else None.

    Vertices of one part share the same open neighborhood, which must be the
    complement of that part.
    """
    groups: dict[frozenset, list[int]] = {}
    for v, nbrs in enumerate(g.neighbor_sets()):
        groups.setdefault(nbrs, []).append(v)
    everything = frozenset(range(g.n))
    for nbrs, members in groups.items():
        if nbrs != everything - frozenset(members):
            return None
    return sorted((len(m) for m in groups.values()), reverse=True)


def is_complete_bipartite(g: Graph) -> bool:
    parts = multipartite_parts(g)
    return parts is not None and len(parts) == 2


def is_balanced_turan(g: Graph) -> bool:
    """T_{n,r} with r | n and r >= 2: complete multipartite with equal parts."""
    parts = multipartite_parts(g)
    return parts is not None and len(parts) >= 2 and len(set(parts)) == 1


def is_balanced_tripartite(g: Graph) -> bool:
    parts = multipartite_parts(g)
    return parts is not None and len(parts) == 3 and len(set(parts)) == 1


# -- graph bounds ----------------------------------------------------------

PATH_CLASS = "paths P_n with n >= 2"


def lower_bound_diameter(g: Graph, value: int | None = None) -> BoundReport:
    """PI_w >= 4d^2 - 4d - 2 + 6m."""
    require_connected(g)
    value = pi_w(g) if value is None else value
    d = diameter(g)
    bound = 4 * d * d - 4 * d - 2 + 6 * g.m
    return _report("lower_bound_diameter", LOWER, Fraction(bound), value,
                   PATH_CLASS, g.n >= 2 and is_path(g))


def lower_bound_path(g: Graph, value: int | None = None) -> BoundReport:
    """PI_w >= n(4n - 6)."""
    require_connected(g)
    value = pi_w(g) if value is None else value
    n = g.n
    return _report("lower_bound_path", LOWER, Fraction(n * (4 * n - 6)), value,
                   PATH_CLASS, n >= 2 and is_path(g))


def upper_bound_triangles(g: Graph, value: int | None = None) -> BoundReport:
    """PI_w <= n^2 m - 9 t^2 / m, decided as m PI_w <= n^2 m^2 - 9 t^2."""
    require_connected(g)
    if g.m == 0:
        raise DomainError("the triangle bound divides by m and needs at least one edge")
    value = pi_w(g) if value is None else value
    n, m, t = g.n, g.m, triangle_total(g)
    member = is_complete_bipartite(g) if t == 0 else is_balanced_turan(g)
    return _report("upper_bound_triangles", UPPER, Fraction(n * n * m * m - 9 * t * t, m), value,
                   "complete bipartite K_{a,b} if t = 0; balanced Turan T_{n,r}, r | n, if t > 0",
                   member)


def upper_bound_global(g: Graph, value: int | None = None) -> BoundReport:
    """PI_w <= 8 n^4 / 27."""
    require_connected(g)
    value = pi_w(g) if value is None else value
    n = g.n
    return _report("upper_bound_global", UPPER, Fraction(8 * n ** 4, 27), value,
                   "K_{n/3,n/3,n/3} with 3 | n", n % 3 == 0 and is_balanced_tripartite(g))


def edge_density_bound(g: Graph, value: int | None = None) -> BoundReport:
    """PI_w <= 8 (n^2 m^2 - 2 m^3) / n^2, the intermediate step of the 8/27 bound.

    Only claimed when 4m >= n^2, where the triangle floor is nonnegative.
    Below that density the inequality can fail (stars are counterexamples).
    """
    require_connected(g)
    n, m = g.n, g.m
    if 4 * m < n * n:
        raise DomainError("edge density bound needs 4m >= n^2")
    value = pi_w(g) if value is None else value
    return _report("edge_density_bound", UPPER, Fraction(8 * (n * n * m * m - 2 * m ** 3), n * n),
                   value, "balanced Turan T_{n,r}, r | n", is_balanced_turan(g))


GRAPH_BOUNDS = (lower_bound_diameter, lower_bound_path, upper_bound_triangles, upper_bound_global)


def all_bounds(g: Graph) -> list[BoundReport]:
    """The four graph bounds (the triangle bound only when m >= 1)."""
    value = pi_w(g)
    return [b(g, value) for b in GRAPH_BOUNDS if not (b is upper_bound_triangles and g.m == 0)]


class EdgeCheck(NamedTuple):
    u: int
    v: int
    closer_sum: int
    closer_limit: int
    degree_sum: int
    degree_limit: int

    @property
    def ok(self) -> bool:
        return self.closer_sum <= self.closer_limit and self.degree_sum <= self.degree_limit


def per_edge_inequalities(g: Graph) -> list[EdgeCheck]:
    """n_u + n_v <= n - t(e) and deg u + deg v <= n + t(e) for every edge."""
    n = g.n
    return [
        EdgeCheck(e.u, e.v, e.n_u + e.n_v, n - e.t_e, e.deg_u + e.deg_v, n + e.t_e)
        for e in edge_stats(g)
    ]


def triangle_floor(n: int, m: int) -> Fraction:
    """(4m - n^2) m / (3n); negative values are vacuous."""
    if n < 1 or not 0 <= m <= n * (n - 1) // 2:
        raise DomainError(f"need n >= 1 and 0 <= m <= n(n-1)/2, got n={n}, m={m}")
    return Fraction((4 * m - n * n) * m, 3 * n)


def effective_triangle_floor(n: int, m: int) -> Fraction:
    return max(Fraction(0), triangle_floor(n, m))
