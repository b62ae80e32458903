import pytest

from topoindex.bounds import multipartite_parts
from topoindex.errors import DomainError, InvalidR, SizeTooSmall
from topoindex.generators import (
    PartitionSpec,
    balanced_bipartite_piw_closed_form,
    balanced_turan_edges,
    balanced_turan_triangles,
    balancing_identity_check,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    multipartite_piw_closed_form,
    path,
    path_piw_closed_form,
    petersen,
    star,
    turan,
    turan_parts,
)
from topoindex.graph import triangle_total
from topoindex.indices import pi_w
from topoindex.verify import partitions


def test_basic_families():
    assert path(1).m == 0 and path(5).m == 4
    assert star(5).degrees() == [4, 1, 1, 1, 1]
    assert cycle(6).degrees() == [2] * 6
    assert complete(5).m == 10
    assert petersen().degrees() == [3] * 10 and petersen().m == 15


@pytest.mark.parametrize("call", [
    lambda: path(0), lambda: star(0), lambda: cycle(2), lambda: complete(0),
    lambda: complete_multipartite([3]), lambda: PartitionSpec([2, 0]),
])
def test_size_errors(call):
    with pytest.raises(SizeTooSmall):
        call()


def test_multipartite_layout():
    g = complete_multipartite([2, 1])
    assert g.edges() == [(0, 2), (1, 2)]
    assert multipartite_parts(complete_multipartite([3, 2, 2])) == [3, 2, 2]


def test_turan_parts():
    assert turan_parts(7, 3).parts == (3, 2, 2)
    assert turan_parts(6, 6).parts == (1,) * 6
    assert turan(4, 4) == complete(4)
    for bad in [(5, 0), (3, 4)]:
        with pytest.raises(InvalidR):
            turan(*bad)


def test_partition_spec():
    spec = PartitionSpec([1, 3, 2])
    assert spec.n == 6 and spec.descending().parts == (3, 2, 1)


def test_path_closed_form_values():
    # P_2: one edge, weight 2, both vertices separated
    assert path_piw_closed_form(2) == 4
    assert [path_piw_closed_form(n) for n in (3, 4, 6)] == [18, 40, 108]
    with pytest.raises(SizeTooSmall):
        path_piw_closed_form(1)


def test_closed_forms_against_direct():
    for n in range(2, 51):
        assert pi_w(path(n)) == path_piw_closed_form(n)
    for n in range(2, 13):
        assert pi_w(complete_bipartite(n // 2, (n + 1) // 2)) == balanced_bipartite_piw_closed_form(n)


def test_multipartite_closed_form_all_partitions():
    for n in range(2, 10):
        for parts in partitions(n):
            if len(parts) >= 2:
                assert multipartite_piw_closed_form(parts) == pi_w(complete_multipartite(parts))


def test_balanced_tripartite_value():
    assert multipartite_piw_closed_form([3, 3, 3]) == 1944
    assert 27 * 1944 == 8 * 9 ** 4


def test_balancing_identity():
    for a in range(1, 7):
        for b in range(1, 7):
            for c in range(2, 7):
                lhs, rhs = balancing_identity_check(a, b, c)
                assert lhs == rhs
    with pytest.raises(DomainError):
        balancing_identity_check(1, 1, 1)


def test_turan_counts():
    for n in range(2, 13):
        for r in range(1, n + 1):
            if n % r == 0:
                g = turan(n, r) if r > 1 else None
                if g is not None:
                    assert g.m == balanced_turan_edges(n, r)
                    assert triangle_total(g) == balanced_turan_triangles(n, r)
    with pytest.raises(InvalidR):
        balanced_turan_edges(7, 3)
