"""Named graph families and closed-form index values for them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DomainError, InvalidR, SizeTooSmall, checked, checked_mul
from .graph import Graph


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, kept in the given order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise SizeTooSmall("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise SizeTooSmall(f"every part must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def descending(self) -> "PartitionSpec":
        return PartitionSpec(sorted(self.parts, reverse=True))

    def __str__(self):
        return ",".join(map(str, self.parts))


def path(n: int) -> Graph:
    if n < 1:
        raise SizeTooSmall(f"path needs n >= 1, got {n}")
    return Graph.unchecked(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 1:
        raise SizeTooSmall(f"star needs n >= 1, got {n}")
    return Graph.unchecked(n, ((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise SizeTooSmall(f"cycle needs n >= 3, got {n}")
    return Graph.unchecked(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise SizeTooSmall(f"complete graph needs n >= 1, got {n}")
    return Graph.unchecked(n, combinations(range(n), 2))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return Graph.unchecked(10, outer + spokes + inner)


def complete_multipartite(spec: PartitionSpec | Sequence[int]) -> Graph:
    """K_{n_1,...,n_k}; part i occupies the next n_i consecutive labels."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(spec)
    if len(spec.parts) < 2 and spec.n > 1:
        raise SizeTooSmall("a single part of size > 1 gives a disconnected graph")
    owner = [i for i, size in enumerate(spec.parts) for _ in range(size)]
    edges = [(u, v) for u, v in combinations(range(spec.n), 2) if owner[u] != owner[v]]
    return Graph.unchecked(spec.n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(PartitionSpec((a, b)))


def turan_parts(n: int, r: int) -> PartitionSpec:
    if not 1 <= r <= n:
        raise InvalidR(f"Turan graph needs 1 <= r <= n, got n={n}, r={r}")
    q, big = divmod(n, r)
    return PartitionSpec([q + 1] * big + [q] * (r - big))


def turan(n: int, r: int) -> Graph:
    """T_{n,r}: complete r-partite graph with part sizes differing by at most one."""
    return complete_multipartite(turan_parts(n, r))


def multipartite_piw_closed_form(spec: PartitionSpec | Sequence[int]) -> int:
    """sum over part pairs of n_i n_j (n_i + n_j) (2n - n_i - n_j)."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(spec)
    n = spec.n
    total = 0
    for a, b in combinations(spec.parts, 2):
        total = checked(total + checked_mul(a, b, a + b, 2 * n - a - b))
    return total


def balancing_identity_check(n1: int, n2: int, n3: int) -> tuple[int, int]:
    """Both sides of the 3-part rebalancing identity.

    Returns ``(PI_w(K_{n1,n2,n3}) - PI_w(K_{n1+1,n2,n3-1}), n (n - n2) (n1 + 1 - n3))``,
    each side evaluated from its own closed form.
    """
    if n1 < 1 or n2 < 1 or n3 < 2:
        raise DomainError(f"need n1, n2 >= 1 and n3 >= 2, got ({n1}, {n2}, {n3})")
    n = n1 + n2 + n3
    lhs = multipartite_piw_closed_form((n1, n2, n3)) - multipartite_piw_closed_form((n1 + 1, n2, n3 - 1))
    rhs = n * (n - n2) * (n1 + 1 - n3)
    return lhs, rhs


def path_piw_closed_form(n: int) -> int:
    """PI_w of the path P_n for n >= 2."""
    if n < 2:
        raise SizeTooSmall("closed form holds for n >= 2")
    return n * (4 * n - 6)


def balanced_bipartite_piw_closed_form(n: int) -> int:
    """PI_w of K_{floor(n/2), ceil(n/2)}."""
    if n < 2:
        raise SizeTooSmall("need n >= 2")
    return n * n * (n // 2) * ((n + 1) // 2)


def balanced_turan_edges(n: int, r: int) -> int:
    """(1 - 1/r) n^2 / 2, defined for r | n."""
    if r < 1 or n % r:
        raise InvalidR(f"balanced formula needs r | n, got n={n}, r={r}")
    value = (1 - Fraction(1, r)) * n * n / 2
    assert value.denominator == 1
    return int(value)


def balanced_turan_triangles(n: int, r: int) -> int:
    """n (n - n/r) (n - 2n/r) / 6, defined for r | n."""
    if r < 1 or n % r:
        raise InvalidR(f"balanced formula needs r | n, got n={n}, r={r}")
    k = n // r
    value = Fraction(n * (n - k) * (n - 2 * k), 6)
    assert value.denominator == 1
    return int(value)
