"""Verification suites behind ``topoindex verify``.

Each suite returns a list of :class:`CheckResult`. Graph-wide claims are
checked on every connected labeled graph up to ``n_max`` with the
vectorized evaluator, and equality sets are compared, up to isomorphism,
against the families the claims single out.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable

import numpy as np

from . import batch, lemmas
from .bounds import all_bounds
from .extremal import canonical_form, canonical_graph, extremal_search
from .formats import write_graph6
from .generators import (
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
    star,
    turan,
)
from .graph import Graph, bfs_distances, triangle_total
from .indices import pi_v, pi_w
from .products import (
    cartesian_power,
    cartesian_product,
    cartesian_product_all,
    piv_product_formula,
    piw_nfold_formula,
    piw_power_formula,
    piw_product_formula,
)

SCOPES = ("bounds", "lemmas", "products", "extremal", "all")


@dataclass
class CheckResult:
    name: str
    passed: bool
    examined: int
    detail: str = ""
    counterexample: str | None = None
    bound_reports: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "examined": self.examined,
            "detail": self.detail,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.bound_reports:
            out["bound_reports"] = self.bound_reports
        return out


# -- helpers ---------------------------------------------------------------

def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges with probability p."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.unchecked(n, edges)


def partitions(n: int, largest: int | None = None):
    """Integer partitions of n in descending order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def fixture_graphs() -> dict[str, Graph]:
    return {
        "P2": path(2), "P3": path(3), "P4": path(4),
        "C3": cycle(3), "C4": cycle(4), "C5": cycle(5),
        "K13": star(4), "K4": complete(4),
    }


def _classes(graphs) -> set:
    return {canonical_form(g) for g in graphs}


def expected_equality_classes(bound: str, n: int) -> set:
    """Canonical forms of the graphs on n vertices predicted to attain ``bound``."""
    if bound in ("lower_bound_diameter", "lower_bound_path"):
        return _classes([path(n)]) if n >= 2 else set()
    if bound == "upper_bound_triangles":
        fams = [complete_bipartite(a, n - a) for a in range(1, n // 2 + 1)]
        fams += [turan(n, r) for r in range(3, n + 1) if n % r == 0]
        return _classes(fams)
    if bound == "upper_bound_global":
        return _classes([turan(n, 3)]) if n % 3 == 0 else set()
    raise KeyError(bound)


# -- exhaustive graph sweep -----------------------------------------------

@dataclass
class _Tally:
    name: str
    examined: int = 0
    failures: int = 0
    first_bad: str | None = None
    equality: set = field(default_factory=set)
    equality_graphs: dict = field(default_factory=dict)

    def record(self, n: int, ok: np.ndarray, codes: np.ndarray):
        self.examined += len(ok)
        bad = np.flatnonzero(~ok)
        self.failures += len(bad)
        if len(bad) and self.first_bad is None:
            self.first_bad = write_graph6(batch.graph_from_code(int(codes[bad[0]]), n))

    def record_equality(self, n: int, eq: np.ndarray, codes: np.ndarray):
        for c in codes[eq]:
            g = batch.graph_from_code(int(c), n)
            key = canonical_form(g)
            if key not in self.equality:
                self.equality.add(key)
                self.equality_graphs[key] = canonical_graph(g)


def sweep_bounds(n_max: int = 7, n_min: int = 1) -> list[CheckResult]:
    """Every graph claim on all connected labeled graphs with n_min <= n <= n_max."""
    names = ("lower_bound_diameter", "lower_bound_path", "upper_bound_triangles", "upper_bound_global")
    tallies = {k: _Tally(k) for k in names}
    extra = {k: _Tally(k) for k in (
        "per_edge_inequalities", "per_edge_sum_bound", "triangle_floor",
        "bipartite_identity", "pi_v_equals_nm_iff_bipartite",
    )}
    eq_mismatch = []
    for n in range(n_min, n_max + 1):
        for b in batch.iter_labeled(n):
            if not len(b):
                continue
            c, pw, m, t, d = b.codes, b.pi_w, b.m, b.triangle_total, b.diameter
            diam_bound = 4 * d * d - 4 * d - 2 + 6 * m
            checks = {
                "lower_bound_diameter": (pw >= diam_bound, pw == diam_bound),
                "lower_bound_path": (pw >= n * (4 * n - 6), pw == n * (4 * n - 6)),
                "upper_bound_global": (27 * pw <= 8 * n ** 4, 27 * pw == 8 * n ** 4),
            }
            if n >= 2:
                lhs, rhs = m * pw, n * n * m * m - 9 * t * t
                checks["upper_bound_triangles"] = (lhs <= rhs, lhs == rhs)
            for k, (ok, eq) in checks.items():
                tallies[k].record(n, ok, c)
                tallies[k].record_equality(n, eq, c)
            extra["per_edge_inequalities"].record(n, b.edge_inequalities_ok, c)
            extra["per_edge_sum_bound"].record(n, pw <= n * n * m - b.triangle_sq_sum, c)
            extra["triangle_floor"].record(n, 3 * n * t >= (4 * m - n * n) * m, c)
            bip = b.is_bipartite
            extra["bipartite_identity"].record(
                n, ~bip | ((pw == n * b.zagreb_m1) & (b.pi_v == n * m)), c)
            extra["pi_v_equals_nm_iff_bipartite"].record(n, (b.pi_v == n * m) == bip, c)
        for k in names:
            if k == "upper_bound_triangles" and n < 2:
                continue
            got = {key for key in tallies[k].equality if key[0] == n}
            want = expected_equality_classes(k, n)
            if got != want:
                eq_mismatch.append((k, n, len(got), len(want)))

    results = []
    for k in names:
        tl = tallies[k]
        reports = [{"graph6": write_graph6(g), **r.to_dict()}
                   for key, g in sorted(tl.equality_graphs.items()) for r in all_bounds(g)
                   if r.bound_name == k]
        mism = [x for x in eq_mismatch if x[0] == k]
        reports_ok = all(r["equality"] and r["matches_expected_class"] for r in reports)
        passed = tl.failures == 0 and not mism and reports_ok
        detail = f"violations={tl.failures}; equality classes={len(tl.equality)}"
        if mism:
            detail += "; equality set differs from prediction at n=" + ",".join(str(x[1]) for x in mism)
        results.append(CheckResult(k, passed, tl.examined, detail, tl.first_bad, reports))
    for k, tl in extra.items():
        results.append(CheckResult(k, tl.failures == 0, tl.examined,
                                   f"violations={tl.failures}", tl.first_bad))
    return results


def check_random_graphs(count: int = 10_000, n_max: int = 30, seed: int = 0) -> CheckResult:
    """The four bounds and the edge inequalities on random connected graphs."""
    rng = random.Random(seed)
    by_n: dict[int, list[Graph]] = {}
    for _ in range(count):
        n = rng.randint(2, n_max)
        by_n.setdefault(n, []).append(random_connected_graph(rng, n, rng.random()))
    bad = 0
    first = None
    for n, graphs in sorted(by_n.items()):
        b = batch.evaluate_graphs(graphs)
        pw, m, t, d = b.pi_w, b.m, b.triangle_total, b.diameter
        ok = (
            (pw >= 4 * d * d - 4 * d - 2 + 6 * m)
            & (pw >= n * (4 * n - 6))
            & (m * pw <= n * n * m * m - 9 * t * t)
            & (27 * pw <= 8 * n ** 4)
            & b.edge_inequalities_ok
        )
        idx = np.flatnonzero(~ok)
        bad += len(idx)
        if len(idx) and first is None:
            first = write_graph6(graphs[idx[0]])
    return CheckResult("random_graph_bounds", bad == 0, count, f"violations={bad}; seed={seed}", first)


def check_closed_forms() -> list[CheckResult]:
    out = []
    bad = [n for n in range(2, 51) if pi_w(path(n)) != path_piw_closed_form(n)]
    out.append(CheckResult("path_closed_form", not bad, 49, f"mismatch at n={bad}" if bad else ""))

    checked = bad_parts = 0
    for n in range(2, 10):
        for parts in partitions(n):
            if len(parts) < 2:
                continue
            checked += 1
            if pi_w(complete_multipartite(parts)) != multipartite_piw_closed_form(parts):
                bad_parts += 1
    out.append(CheckResult("multipartite_closed_form", bad_parts == 0, checked, f"mismatches={bad_parts}"))

    grid = [(a, b, c) for a in range(1, 12) for b in range(1, 12) for c in range(2, 12) if a + b + c <= 12]
    bad_grid = [x for x in grid if len(set(balancing_identity_check(*x))) != 1]
    out.append(CheckResult("balancing_identity", not bad_grid, len(grid), f"mismatches={len(bad_grid)}"))

    tur = [(n, r) for n in range(2, 13) for r in range(2, n + 1) if n % r == 0]
    bad_tur = [
        (n, r) for n, r in tur
        if turan(n, r).m != balanced_turan_edges(n, r) or triangle_total(turan(n, r)) != balanced_turan_triangles(n, r)
    ]
    out.append(CheckResult("turan_formulas", not bad_tur, len(tur), f"mismatches={bad_tur}"))
    return out


# -- algebraic inequalities ------------------------------------------------

def _lemma_check(name: str, samples: int, draw: Callable, test: Callable) -> CheckResult:
    bad = 0
    first = None
    for _ in range(samples):
        args = draw()
        if not test(*args):
            bad += 1
            first = first or repr(args)
    return CheckResult(name, bad == 0, samples, f"violations={bad}" + (f"; first={first}" if first else ""))


def sweep_lemmas(samples: int = 100_000, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    third, quarter = Fraction(1, 3), Fraction(1, 4)
    eight27 = lemmas.EIGHT_27

    def abc_ok(a, b, c):
        v = lemmas.lemma_abc(a, b, c)
        return 0 <= v <= eight27 and (v < eight27 or a == b == c == third)

    def f_ok(a):
        v = lemmas.f_multipart(a)
        if v < eight27:
            return True
        top = sorted(a, reverse=True)
        return v == eight27 and top[:3] == [third] * 3 and not any(top[3:])

    def red_ok(a):
        gap = lemmas.reduction_gap(a)
        return gap >= 0 and (gap > 0 or a[-1] == 0 or list(a) == [quarter] * 4)

    def sq_ok(a, x):
        gap = lemmas.squaresum_gap(a, x)
        return gap >= 0 and (gap > 0 or (len(a) == 2 and a[1] == x))

    def draw_reduction():
        k = rng.randint(4, 8)
        return (lemmas.random_simplex_point(rng, k, descending=True),)

    results = [
        _lemma_check("lemma_abc", samples, lambda: lemmas.random_simplex_point(rng, 3, positive=True), abc_ok),
        _lemma_check("f_multipart", samples, lambda: (lemmas.random_simplex_point(rng, rng.randint(1, 8)),), f_ok),
        _lemma_check("reduction_step", samples, draw_reduction, red_ok),
        _lemma_check("lemma_squaresum", samples, lambda: lemmas.random_squaresum_instance(rng, rng.randint(2, 8)), sq_ok),
    ]
    anchors = [
        lemmas.lemma_abc(third, third, third) == eight27,
        lemmas.f_multipart([third] * 3) == eight27,
        lemmas.f_multipart([quarter] * 4) == Fraction(9, 32),
        lemmas.f_multipart([1, 0, 0]) == 0,
        lemmas.reduction_gap([quarter] * 4) == 0,
        lemmas.squaresum_gap([3, 1], 1) == 0,
    ]
    results.append(CheckResult("lemma_anchor_points", all(anchors), len(anchors),
                               f"anchors ok={sum(anchors)}/{len(anchors)}; seed={seed}"))
    return results


# -- products --------------------------------------------------------------

def check_products(triples: bool = True) -> list[CheckResult]:
    fx = fixture_graphs()
    names = list(fx)
    bad_pairs = []
    additivity_bad = 0
    for a, b in product(names, repeat=2):
        g, h = fx[a], fx[b]
        gh = cartesian_product(g, h)
        direct_w, direct_v = pi_w(gh), pi_v(gh)
        if piw_product_formula(g, h) != direct_w or piv_product_formula([g, h]) != direct_v \
                or piw_nfold_formula([g, h]) != direct_w:
            bad_pairs.append(f"{a}x{b}")
        additivity_bad += _additivity_failures(g, h, gh)
    out = [
        CheckResult("product_pairs", not bad_pairs, len(names) ** 2, f"mismatches={bad_pairs}"),
        CheckResult("product_additivity", additivity_bad == 0, len(names) ** 2, f"failures={additivity_bad}"),
    ]
    if triples:
        bad_triples = []
        combos = list(combinations_with_replacement(names, 3))
        for combo in combos:
            graphs = [fx[x] for x in combo]
            direct = cartesian_product_all(graphs)
            if piw_nfold_formula(graphs) != pi_w(direct) or piv_product_formula(graphs) != pi_v(direct):
                bad_triples.append("x".join(combo))
        out.append(CheckResult("product_triples", not bad_triples, len(combos), f"mismatches={bad_triples}"))
    bad_pow = []
    for name, g in (("P2", path(2)), ("P3", path(3))):
        for k in range(1, 5):
            val = piw_power_formula(g, k)
            if val != piw_nfold_formula([g] * k) or val != pi_w(cartesian_power(g, k)):
                bad_pow.append(f"{name}^{k}")
    out.append(CheckResult("power_corollary", not bad_pow, 8, f"mismatches={bad_pow}"))
    c4, q3 = cartesian_power(path(2), 2), cartesian_power(path(2), 3)
    anchors = (pi_w(c4) == 64 == piw_product_formula(path(2), path(2))
               and pi_w(q3) == 576 == piw_nfold_formula([path(2)] * 3))
    out.append(CheckResult("product_anchors", anchors, 2, "PI_w(C4)=64, PI_w(Q3)=576"))
    return out


def _additivity_failures(g: Graph, h: Graph, gh: Graph) -> int:
    nh = h.n
    bad = 0
    for x in range(gh.n):
        a, b = divmod(x, nh)
        if gh.degree(x) != g.degree(a) + h.degree(b):
            bad += 1
    dg = [bfs_distances(g, s) for s in range(g.n)]
    dh = [bfs_distances(h, s) for s in range(h.n)]
    for x in range(gh.n):
        row = bfs_distances(gh, x)
        a, b = divmod(x, nh)
        for y in range(gh.n):
            c, d = divmod(y, nh)
            if row[y] != dg[a][c] + dh[b][d]:
                bad += 1
    return bad


# -- extremal --------------------------------------------------------------

def check_extremal(n_max: int = 7) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        res = extremal_search(n, "pi_w")
        want_min = [write_graph6(canonical_graph(path(n)))]
        ok_min = res.min_value == n * (4 * n - 6) and res.min_witnesses == want_min
        out.append(CheckResult(f"extremal_min_n{n}", ok_min, res.examined,
                               f"min={res.min_value} witnesses={res.min_witnesses}"))
        if n % 3 == 0:
            want = [write_graph6(canonical_graph(turan(n, 3)))]
            ok_max = 27 * res.max_value == 8 * n ** 4 and res.max_witnesses == want
        else:
            ok_max = 27 * res.max_value < 8 * n ** 4
        out.append(CheckResult(f"extremal_max_n{n}", ok_max, res.examined,
                               f"max={res.max_value} witnesses={res.max_witnesses}"))
    return out


def run(scope: str, n_max: int = 7, samples: int = 100_000, seed: int = 0,
        random_graphs: int = 10_000) -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {SCOPES}")
    results: list[CheckResult] = []
    if scope in ("bounds", "all"):
        results += sweep_bounds(n_max)
        results.append(check_random_graphs(random_graphs, seed=seed))
        results += check_closed_forms()
    if scope in ("lemmas", "all"):
        results += sweep_lemmas(samples, seed)
    if scope in ("products", "all"):
        results += check_products()
    if scope in ("extremal", "all"):
        results += check_extremal(n_max)
    return results
