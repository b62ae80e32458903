from itertools import product as iproduct

import networkx as nx
import pytest

from conftest import from_nx, oracle_indices, to_nx
from topoindex.errors import Disconnected, IndexOverflow, SizeTooSmall
from topoindex.generators import complete, cycle, path, star
from topoindex.graph import Graph, bfs_distances
from topoindex.indices import pi_v, pi_w
from topoindex.products import (
    ProductFactors,
    cartesian_power,
    cartesian_product,
    cartesian_product_all,
    factor_invariants,
    piv_product_formula,
    piw_nfold_formula,
    piw_power_formula,
    piw_product_formula,
)
from topoindex.verify import fixture_graphs

FIXTURES = fixture_graphs()


def test_labeling_is_row_major():
    g = cartesian_product(path(2), path(3))
    # (a, b) -> 3a + b
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]


def test_product_isomorphic_to_networkx():
    for (_, g), (_, h) in iproduct(FIXTURES.items(), repeat=2):
        ours = to_nx(cartesian_product(g, h))
        theirs = nx.cartesian_product(to_nx(g), to_nx(h))
        assert nx.is_isomorphic(ours, theirs)


def test_anchor_values_two_ways():
    c4 = cartesian_product(path(2), path(2))
    q3 = cartesian_power(path(2), 3)
    assert pi_w(c4) == oracle_indices(c4)["pi_w"] == 64
    assert piw_product_formula(path(2), path(2)) == 64
    assert pi_w(q3) == oracle_indices(from_nx(nx.hypercube_graph(3)))["pi_w"] == 576
    assert piw_nfold_formula([path(2)] * 3) == piw_power_formula(path(2), 3) == 576


@pytest.mark.parametrize("a, b", list(iproduct(FIXTURES, repeat=2)))
def test_pair_formula(a, b):
    g, h = FIXTURES[a], FIXTURES[b]
    gh = cartesian_product(g, h)
    assert piw_product_formula(g, h) == pi_w(gh)
    assert piv_product_formula([g, h]) == pi_v(gh)


def test_nfold_triples():
    names = list(FIXTURES)
    for trip in iproduct(names[:4], repeat=3):
        gs = [FIXTURES[k] for k in trip]
        direct = cartesian_product_all(gs)
        assert piw_nfold_formula(gs) == pi_w(direct)
        assert piv_product_formula(gs) == pi_v(direct)


@pytest.mark.parametrize("g", [path(2), path(3), cycle(3), star(4)])
def test_power_formula(g):
    for k in range(1, 5):
        assert piw_power_formula(g, k) == piw_nfold_formula([g] * k)
    for k in range(1, 4):
        assert piw_power_formula(g, k) == pi_w(cartesian_power(g, k))


def test_additivity():
    g, h = cycle(5), star(4)
    gh = cartesian_product(g, h)
    dg = [bfs_distances(g, s) for s in range(g.n)]
    dh = [bfs_distances(h, s) for s in range(h.n)]
    for x in range(gh.n):
        a, b = divmod(x, h.n)
        assert gh.degree(x) == g.degree(a) + h.degree(b)
        row = bfs_distances(gh, x)
        for y in range(gh.n):
            c, d = divmod(y, h.n)
            assert row[y] == dg[a][c] + dh[b][d]


def test_invariants_and_errors():
    assert tuple(factor_invariants(cycle(4))) == (4, 4, 16, 64)
    assert ProductFactors.of([path(2)]).invariants[0].pi_w == 4
    with pytest.raises(SizeTooSmall):
        ProductFactors.of([])
    with pytest.raises(SizeTooSmall):
        piw_power_formula(path(2), 0)
    with pytest.raises(Disconnected):
        cartesian_product(path(2), Graph.unchecked(2, []))


def test_formula_overflow_reported():
    with pytest.raises(IndexOverflow):
        piw_power_formula(complete(8), 30)
