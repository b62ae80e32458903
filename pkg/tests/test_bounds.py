from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from topoindex.bounds import (
    EdgeCheck,
    all_bounds,
    edge_density_bound,
    effective_triangle_floor,
    is_balanced_tripartite,
    is_balanced_turan,
    is_complete_bipartite,
    is_path,
    lower_bound_diameter,
    lower_bound_path,
    multipartite_parts,
    per_edge_inequalities,
    triangle_floor,
    upper_bound_global,
    upper_bound_triangles,
)
from topoindex.errors import DomainError
from topoindex.generators import (
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    path,
    petersen,
    star,
    turan,
)
from topoindex.graph import Graph, triangle_total


def test_class_predicates():
    assert is_path(path(5)) and is_path(path(1)) and not is_path(star(4)) and not is_path(cycle(4))
    assert is_complete_bipartite(star(5)) and is_complete_bipartite(cycle(4))
    assert not is_complete_bipartite(cycle(6))
    assert is_balanced_turan(turan(6, 3)) and is_balanced_turan(complete(5))
    assert not is_balanced_turan(turan(7, 3))
    assert is_balanced_tripartite(turan(9, 3)) and is_balanced_tripartite(complete(3))
    assert multipartite_parts(petersen()) is None


def test_path_equality():
    for n in range(2, 15):
        for bound in (lower_bound_diameter, lower_bound_path):
            r = bound(path(n))
            assert r.holds and r.equality and r.in_expected_class


def test_single_vertex_path_is_not_tight():
    g = Graph.unchecked(1, [])
    r = lower_bound_path(g)
    assert r.bound_value == -2 and r.index_value == 0
    assert r.holds and not r.equality and not r.in_expected_class and r.matches_expected_class


def test_triangle_bound_equality_cases():
    for a in range(1, 5):
        for b in range(a, 6):
            r = upper_bound_triangles(complete_bipartite(a, b))
            assert r.equality and r.in_expected_class
    for n, k in [(6, 3), (8, 4), (9, 3), (6, 6)]:
        r = upper_bound_triangles(turan(n, k))
        assert r.equality and r.in_expected_class
    r = upper_bound_triangles(turan(7, 3))
    assert r.holds and not r.equality and r.matches_expected_class


def test_triangle_bound_needs_edges():
    with pytest.raises(DomainError):
        upper_bound_triangles(Graph.unchecked(1, []))
    assert [r.bound_name for r in all_bounds(Graph.unchecked(1, []))] == [
        "lower_bound_diameter", "lower_bound_path", "upper_bound_global"]


def test_global_bound():
    r = upper_bound_global(complete_multipartite([2, 2, 2]))
    assert r.index_value == 384 and r.equality and r.bound_value == 384
    r = upper_bound_global(complete(3))
    assert r.equality and r.in_expected_class
    r = upper_bound_global(turan(7, 3))
    assert r.holds and not r.equality
    assert r.bound_value == Fraction(8 * 7**4, 27)


def test_report_dict():
    d = upper_bound_global(path(4)).to_dict()
    assert d["bound_value"] == {"numerator": 2048, "denominator": 27}
    assert d["matches_expected_class"] is True


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=12))
def test_bounds_hold(g):
    for r in all_bounds(g):
        assert r.holds, r
        assert r.matches_expected_class, r


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=12))
def test_per_edge(g):
    checks = per_edge_inequalities(g)
    assert len(checks) == g.m and all(isinstance(c, EdgeCheck) and c.ok for c in checks)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=12))
def test_triangle_floor_property(g):
    assert triangle_total(g) >= effective_triangle_floor(g.n, g.m)


def test_triangle_floor_values():
    # K_4 attains the floor: (24 - 16) * 6 / 12 = 4 triangles
    assert triangle_floor(4, 6) == 4 == triangle_total(complete(4))
    assert triangle_floor(4, 3) < 0 and effective_triangle_floor(4, 3) == 0
    with pytest.raises(DomainError):
        triangle_floor(3, 4)


def test_edge_density_bound_domain():
    r = edge_density_bound(turan(6, 3))
    assert r.holds and r.equality and r.in_expected_class
    with pytest.raises(DomainError):
        edge_density_bound(star(6))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=2, max_n=10))
def test_edge_density_bound_property(g):
    if 4 * g.m >= g.n * g.n:
        assert edge_density_bound(g).holds
