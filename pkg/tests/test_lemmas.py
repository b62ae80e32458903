import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topoindex.errors import DomainError
from topoindex.generators import complete_multipartite
from topoindex.indices import pi_w
from topoindex.lemmas import (
    EIGHT_27,
    f_multipart,
    lemma_abc,
    lemma_squaresum_check,
    random_simplex_point,
    random_squaresum_instance,
    reduction_gap,
    reduction_step_check,
    squaresum_gap,
)

THIRD, QUARTER = Fraction(1, 3), Fraction(1, 4)


def simplex(min_k=1, max_k=8, positive=False):
    low = 1 if positive else 0

    @st.composite
    def build(draw):
        k = draw(st.integers(min_k, max_k))
        nums = draw(st.lists(st.integers(low, 1 << 16), min_size=k, max_size=k).filter(any))
        total = sum(nums)
        return [Fraction(v, total) for v in nums]
    return build()


def test_anchor_points():
    assert lemma_abc(THIRD, THIRD, THIRD) == EIGHT_27
    assert f_multipart([THIRD] * 3) == EIGHT_27
    assert f_multipart([QUARTER] * 4) == Fraction(9, 32)
    assert f_multipart([1]) == 0
    assert f_multipart([Fraction(1, 2)] * 2) == Fraction(1, 4)


def test_f_matches_multipartite_index():
    for parts in ([1, 1], [2, 1], [3, 3, 3], [4, 2, 1, 1], [2, 2, 2, 2, 1]):
        n = sum(parts)
        a = [Fraction(p, n) for p in parts]
        assert f_multipart(a) * n**4 == pi_w(complete_multipartite(parts))


@settings(max_examples=300, deadline=None)
@given(simplex(3, 3, positive=True))
def test_lemma_abc(a):
    v = lemma_abc(*a)
    assert 0 < v <= EIGHT_27
    assert (v == EIGHT_27) == (a == [THIRD] * 3)


@settings(max_examples=300, deadline=None)
@given(simplex())
def test_f_bound(a):
    assert f_multipart(a) <= EIGHT_27


@settings(max_examples=300, deadline=None)
@given(simplex(4, 8))
def test_reduction_step(a):
    a = sorted(a, reverse=True)
    assert reduction_step_check(a)


@settings(max_examples=300, deadline=None)
@given(simplex(2, 8, positive=True), st.fractions(0, 1).filter(lambda x: x > 0))
def test_squaresum(a, frac):
    a = sorted(a, reverse=True)
    x = a[-1] * frac
    assert lemma_squaresum_check(a, x)
    assert squaresum_gap(a, x) >= 0


def test_reduction_gap_value():
    assert reduction_gap([QUARTER] * 4) == 0
    assert reduction_gap([Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 8)]) > 0


@pytest.mark.parametrize("call", [
    lambda: lemma_abc(Fraction(1, 2), Fraction(1, 2), 0),
    lambda: lemma_abc(Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)),
    lambda: f_multipart([]),
    lambda: f_multipart([Fraction(3, 2), Fraction(-1, 2)]),
    lambda: reduction_gap([THIRD] * 3),
    lambda: reduction_gap([Fraction(1, 8), Fraction(1, 8), QUARTER, Fraction(1, 2)]),
    lambda: squaresum_gap([1], Fraction(1, 2)),
    lambda: squaresum_gap([2, 1], 2),
    lambda: squaresum_gap([1, 2], Fraction(1, 2)),
    lambda: f_multipart(["x"]),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_random_generators():
    rng = random.Random(1)
    for _ in range(200):
        p = random_simplex_point(rng, 5, positive=True, descending=True)
        assert sum(p) == 1 and min(p) > 0 and p == sorted(p, reverse=True)
        a, x = random_squaresum_instance(rng, 4)
        assert 0 < x <= a[-1] and a == sorted(a, reverse=True)
