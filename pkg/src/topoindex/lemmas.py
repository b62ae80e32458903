"""Exact evaluation of the algebraic inequalities behind the 8/27 bound.

Inputs are :class:`fractions.Fraction` (ints are accepted). Internally every
tuple is scaled to a common denominator ``D`` so the polynomial sums run on
plain integers and a single Fraction is built at the end; this keeps the
randomized sweeps fast without giving up exactness.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .errors import DomainError

EIGHT_27 = Fraction(8, 27)


def _as_fractions(values) -> list[Fraction]:
    try:
        return [v if type(v) is Fraction else Fraction(v) for v in values]
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a rational: {exc}") from None


def _scaled(values) -> tuple[list[int], int]:
    """Integers ``A_i`` and ``D`` with ``values[i] == A_i / D``."""
    vals = _as_fractions(values)
    d = lcm(*(v.denominator for v in vals)) if vals else 1
    return [v.numerator * (d // v.denominator) for v in vals], d


def _require_unit_sum(ints: Sequence[int], d: int) -> None:
    if sum(ints) != d:
        raise DomainError(f"values must sum to 1, got {Fraction(sum(ints), d)}")


def _require_descending(ints: Sequence[int]) -> None:
    if any(a < b for a, b in zip(ints, ints[1:])):
        raise DomainError("values must be sorted in descending order")


def lemma_abc(a, b, c) -> Fraction:
    """ab + bc + ca - abc for positive a, b, c with a + b + c = 1."""
    (x, y, z), d = _scaled((a, b, c))
    if min(x, y, z) <= 0:
        raise DomainError("a, b, c must be positive")
    _require_unit_sum((x, y, z), d)
    return Fraction((x * y + y * z + z * x) * d - x * y * z, d ** 3)


def f_multipart(a: Sequence) -> Fraction:
    """sum_{i<j} a_i a_j (a_i + a_j)(2 - a_i - a_j) for nonnegative a summing to 1.

    With ``a_i = n_i / n`` this is PI_w(K_{n_1,...,n_k}) / n^4.
    """
    ints, d = _scaled(a)
    if not ints or min(ints) < 0:
        raise DomainError("need at least one nonnegative value")
    _require_unit_sum(ints, d)
    return Fraction(_f_numerator(ints, d), d ** 4)


def _f_numerator(ints: Sequence[int], d: int) -> int:
    two_d = 2 * d
    return sum(x * y * (x + y) * (two_d - x - y) for x, y in combinations(ints, 2))


def reduction_gap(a: Sequence) -> Fraction:
    """F(a_1, ..., a_{n-2}, a_{n-1} + a_n, 0) - F(a_1, ..., a_n)."""
    ints, d = _scaled(a)
    if len(ints) < 4:
        raise DomainError("merging step needs at least 4 values")
    if min(ints) < 0:
        raise DomainError("values must be nonnegative")
    _require_descending(ints)
    _require_unit_sum(ints, d)
    merged = ints[:-2] + [ints[-2] + ints[-1], 0]
    return Fraction(_f_numerator(merged, d) - _f_numerator(ints, d), d ** 4)


def reduction_step_check(a: Sequence) -> bool:
    """True iff merging the two smallest parts does not decrease F."""
    return reduction_gap(a) >= 0


def squaresum_gap(a: Sequence, x) -> Fraction:
    """(Y - X)^2 + X^2 - sum a_i^2 where Y = sum a_i."""
    ints, d = _scaled(list(a) + [x])
    *ints, xi = ints
    if len(ints) < 2:
        raise DomainError("need n >= 2 values")
    if xi <= 0 or min(ints) < xi:
        raise DomainError("need a_1 >= ... >= a_n >= X > 0")
    _require_descending(ints)
    y = sum(ints)
    return Fraction((y - xi) ** 2 + xi * xi - sum(v * v for v in ints), d * d)


def lemma_squaresum_check(a: Sequence, x) -> bool:
    return squaresum_gap(a, x) >= 0


def random_simplex_point(
    rng: random.Random, k: int, positive: bool = False, descending: bool = False
) -> list[Fraction]:
    """k rationals summing to 1 from numerators uniform on [0, 2^16].

    With ``positive`` the numerators are drawn from [1, 2^16] instead.
    """
    low = 1 if positive else 0
    top = (1 << 16) + 1
    while True:
        nums = [rng.randrange(low, top) for _ in range(k)]
        total = sum(nums)
        if total:
            break
    if descending:
        nums.sort(reverse=True)
    return [Fraction(v, total) for v in nums]


def random_squaresum_instance(rng: random.Random, k: int) -> tuple[list[Fraction], Fraction]:
    """A descending positive tuple of length k and a threshold X <= its minimum."""
    scale = Fraction(rng.randint(1, 1 << 16), rng.randint(1, 1 << 8))
    vals = [v * scale for v in random_simplex_point(rng, k, positive=True, descending=True)]
    x = vals[-1] * Fraction(rng.randint(1, 1 << 16), 1 << 16)
    return vals, x
