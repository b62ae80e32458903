import io
import random
from collections import Counter

import networkx as nx
import pytest

from conftest import from_nx
from topoindex.errors import ParseError, SizeTooSmall, TooLarge
from topoindex.extremal import (
    EnumerationConfig,
    IngestStats,
    canonical_form,
    canonical_form_exhaustive,
    canonical_graph,
    enumerate_connected,
    extremal_search,
    ingest_graph6_stream,
    iter_labeled_connected,
)
from topoindex.formats import read_graph6, write_graph6
from topoindex.generators import complete, complete_multipartite, path, turan
from topoindex.indices import compute_indices

CONNECTED = [1, 1, 2, 6, 21, 112, 853]


def atlas_connected():
    by_n = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            by_n.setdefault(h.number_of_nodes(), []).append(from_nx(h))
    return by_n


ATLAS = atlas_connected()


@pytest.mark.parametrize("n", range(1, 8))
def test_class_counts_match_atlas(n):
    reps = list(enumerate_connected(n, dedupe=True))
    assert len(reps) == CONNECTED[n - 1] == len(ATLAS[n])
    assert {canonical_form(g) for g in reps} == {canonical_form(g) for g in ATLAS[n]}


@pytest.mark.parametrize("n", range(1, 7))
def test_refined_form_agrees_with_exhaustive(n):
    reps = ATLAS[n]
    refined = {canonical_form(g) for g in reps}
    exhaustive = {canonical_form_exhaustive(g) for g in reps}
    assert len(refined) == len(exhaustive) == len(reps)


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(9)
    for g in ATLAS[6] + ATLAS[7][::10]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(h) == canonical_form(g)
        assert canonical_graph(h) == canonical_graph(g)
        if g.n <= 6:
            assert canonical_form_exhaustive(h) == canonical_form_exhaustive(g)


def test_labeled_enumeration_counts():
    assert [sum(1 for _ in iter_labeled_connected(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]


def test_config_limits():
    with pytest.raises(TooLarge):
        EnumerationConfig(n=9)
    with pytest.raises(SizeTooSmall):
        EnumerationConfig(n=0)
    with pytest.raises(TooLarge):
        list(iter_labeled_connected(9))


def test_extremal_small():
    res = extremal_search(4)
    assert res.min_value == 40 and res.min_witnesses == [write_graph6(canonical_graph(path(4)))]
    assert res.max_value == 72 and len(res.max_witnesses) == 2
    got = {canonical_form(read_graph6(w)) for w in res.max_witnesses}
    k4_minus = complete_multipartite([2, 1, 1])
    assert got == {canonical_form(complete(4)), canonical_form(k4_minus)}
    assert res.examined == 38


@pytest.mark.parametrize("n", [5, 6])
def test_dedupe_and_labeled_agree(n):
    a = extremal_search(n, dedupe=False)
    b = extremal_search(n, dedupe=True)
    assert (a.min_value, a.min_witnesses, a.max_value, a.max_witnesses) == (
        b.min_value, b.min_witnesses, b.max_value, b.max_witnesses)
    assert b.examined == CONNECTED[n - 1]


def test_extremal_n6_max_is_balanced_tripartite():
    res = extremal_search(6)
    assert res.max_value == 384
    assert res.max_witnesses == [write_graph6(canonical_graph(turan(6, 3)))]


def test_objectives_against_scalar():
    for obj, field in [("wiener", "wiener"), ("m1", "zagreb_m1"), ("szeged", "szeged"),
                       ("sz_w", "sz_w"), ("pi_v", "pi_v"), ("m2", "zagreb_m2")]:
        res = extremal_search(5, obj, dedupe=True)
        vals = [getattr(compute_indices(g), field) for g in ATLAS[5]]
        assert (res.min_value, res.max_value) == (min(vals), max(vals))
        c = Counter(vals)
        assert len(res.min_witnesses) == c[min(vals)] and len(res.max_witnesses) == c[max(vals)]
    with pytest.raises(ValueError):
        extremal_search(4, "nope")


def test_ingest_skips_disconnected(tmp_path):
    lines = [write_graph6(path(3)), "B?", write_graph6(complete(3)), write_graph6(path(3).relabel([1, 0, 2]))]
    stats = IngestStats()
    got = list(ingest_graph6_stream(lines, stats))
    assert len(got) == 3 and stats.read == 4 and stats.skipped_disconnected == 1

    f = tmp_path / "g.g6"
    f.write_text("\n".join(lines) + "\n")
    res = extremal_search(None, source=str(f))
    assert res.examined == 3 and res.skipped_disconnected == 1
    assert res.max_value == 24 and res.min_value == 18
    deduped = list(enumerate_connected(EnumerationConfig(source=str(f), dedupe=True)))
    assert len(deduped) == 2
    res = extremal_search(None, source=str(f), dedupe=True)
    assert res.examined == 2


def test_ingest_reports_line():
    with pytest.raises(ParseError) as info:
        list(ingest_graph6_stream(io.StringIO("A_\nnot graph6!\n")))
    assert info.value.line == 2


def test_result_json():
    res = extremal_search(3)
    d = res.to_dict()
    assert d["objective"] == "pi_w" and d["n"] == 3 and d["max_value"] == 24
