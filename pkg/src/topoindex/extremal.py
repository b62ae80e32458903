"""Exhaustive enumeration of small connected graphs and extremal search.

Two canonical forms are provided. :func:`canonical_form_exhaustive` takes
the lexicographically smallest adjacency bitstring over all ``n!``
relabelings. :func:`canonical_form` first splits the vertices into cells by
iterated degree refinement, orders the cells by their (relabeling-invariant)
refinement signature, and minimizes only over relabelings that respect the
cell order. Both are complete invariants; the refined one is what makes
n = 8 tractable, and the exhaustive one is its oracle on small n.

Bitstrings use graph6 order (upper triangle, column by column).
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Iterator, TextIO

import numpy as np

from . import batch
from .errors import SizeTooSmall, TooLarge
from .formats import iter_graph6_lines, write_graph6
from .graph import Graph
from .indices import compute_indices

log = logging.getLogger(__name__)

MAX_INTERNAL_N = 8

OBJECTIVES = {
    "pi_w": "pi_w",
    "pi_v": "pi_v",
    "szeged": "szeged",
    "sz_w": "sz_w",
    "wiener": "wiener",
    "m1": "zagreb_m1",
    "m2": "zagreb_m2",
}


# -- canonical forms -------------------------------------------------------

def _masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in nbrs) for nbrs in g.adj]


def _bitstring(masks: list[int], order) -> int:
    """Adjacency bits of the relabeling that puts ``order[i]`` at position i."""
    code = 0
    for j in range(1, len(order)):
        row = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def canonical_form_exhaustive(g: Graph) -> tuple[int, int]:
    masks = _masks(g)
    return g.n, min(_bitstring(masks, p) for p in permutations(range(g.n)))


def refine(g: Graph) -> list[int]:
    """Stable vertex colors from iterated degree refinement.

    Colors are ranks of sorted signatures, so they depend only on the
    isomorphism class and the vertex's role, not on its label.
    """
    colors = [len(a) for a in g.adj]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _refined_minimum(g: Graph) -> tuple[tuple, list[int]]:
    colors = refine(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    masks = _masks(g)
    best_code, best_order = None, None
    for choice in product(*(permutations(cell) for cell in ordered)):
        order = [v for part in choice for v in part]
        code = _bitstring(masks, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return (g.n, tuple(len(c) for c in ordered), best_code), best_order


def canonical_form(g: Graph) -> tuple:
    """Refined canonical certificate ``(n, cell sizes, min bitstring)``."""
    return _refined_minimum(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The relabeling of ``g`` that realizes its refined canonical bitstring."""
    order = _refined_minimum(g)[1]
    position = {v: i for i, v in enumerate(order)}
    return g.relabel([position[v] for v in range(g.n)])


# -- enumeration -----------------------------------------------------------

@dataclass(frozen=True)
class EnumerationConfig:
    n: int | None = None
    dedupe: bool = False
    source: str | None = None  # path to a graph6 file; None means internal

    def __post_init__(self):
        if self.source is None:
            if self.n is None or self.n < 1:
                raise SizeTooSmall("internal enumeration needs n >= 1")
            if self.n > MAX_INTERNAL_N:
                raise TooLarge(f"internal enumeration is limited to n <= {MAX_INTERNAL_N}")


def _is_connected_masks(masks: list[int]) -> bool:
    seen = frontier = 1
    while frontier:
        grow = 0
        rest = frontier
        while rest:
            low = rest & -rest
            grow |= masks[low.bit_length() - 1]
            rest ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << len(masks)) - 1


def iter_labeled_connected(n: int) -> Iterator[Graph]:
    """Every connected graph on labeled vertices 0..n-1, once each."""
    if n < 1:
        raise SizeTooSmall("n >= 1 required")
    if n > MAX_INTERNAL_N:
        raise TooLarge(f"internal enumeration is limited to n <= {MAX_INTERNAL_N}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    k = len(pairs)
    for code in range(1 << k):
        masks = [0] * n
        edges = []
        for idx, (i, j) in enumerate(pairs):
            if (code >> (k - 1 - idx)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
                edges.append((i, j))
        if _is_connected_masks(masks):
            yield Graph.unchecked(n, edges)


@lru_cache(maxsize=None)
def _unlabeled_connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.unchecked(1, ()),)
    # every connected graph has a non-cut vertex, so it arises from a
    # connected graph on n - 1 vertices plus one vertex with >= 1 neighbor
    found: dict[tuple, Graph] = {}
    for base in _unlabeled_connected(n - 1):
        edges = base.edges()
        for subset in range(1, 1 << (n - 1)):
            new_edges = edges + [(v, n - 1) for v in range(n - 1) if (subset >> v) & 1]
            g = Graph.unchecked(n, new_edges)
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def enumerate_connected(config: EnumerationConfig | int, dedupe: bool | None = None) -> Iterator[Graph]:
    """Stream connected graphs per ``config``.

    Labeled mode yields each labeled graph once; dedupe mode yields one
    canonically labeled representative per isomorphism class. With an
    external ``source`` the file's graphs are streamed (disconnected ones
    skipped) and deduplicated on request.
    """
    if isinstance(config, int):
        config = EnumerationConfig(n=config, dedupe=bool(dedupe))
    if config.source is not None:
        stream = ingest_graph6_stream(config.source)
        yield from _dedupe(stream) if config.dedupe else stream
        return
    if config.dedupe:
        yield from _unlabeled_connected(config.n)
    else:
        yield from iter_labeled_connected(config.n)


@dataclass
class IngestStats:
    read: int = 0
    skipped_disconnected: int = 0


def ingest_graph6_stream(
    source: str | os.PathLike | Iterable[str] | TextIO,
    stats: IngestStats | None = None,
) -> Iterator[Graph]:
    """Parse newline-separated graph6, skipping (and counting) disconnected graphs.

    ``source`` is a file path or an iterable of lines. Malformed lines raise
    ParseError carrying the line number.
    """
    stats = stats if stats is not None else IngestStats()
    if isinstance(source, (str, os.PathLike)):
        with open(source) as fh:
            yield from ingest_graph6_stream(fh, stats)
        return
    lines = source
    for lineno, g in iter_graph6_lines(lines):
        stats.read += 1
        if g.n == 0 or not g.is_connected():
            stats.skipped_disconnected += 1
            log.warning("line %d: skipping disconnected graph", lineno)
            continue
        yield g


# -- extremal search -------------------------------------------------------

@dataclass
class ExtremalResult:
    objective: str
    n: int | None
    examined: int
    min_value: int | None = None
    min_witnesses: list[str] = field(default_factory=list)
    max_value: int | None = None
    max_witnesses: list[str] = field(default_factory=list)
    skipped_disconnected: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _witness_codes(graphs: Iterable[Graph]) -> list[str]:
    uniq: dict[tuple, Graph] = {}
    for g in graphs:
        key = canonical_form(g)
        if key not in uniq:
            uniq[key] = canonical_graph(g)
    return [write_graph6(uniq[k]) for k in sorted(uniq)]


def _objective_field(objective: str) -> str:
    try:
        return OBJECTIVES[objective]
    except KeyError:
        raise ValueError(f"unknown objective {objective!r}; choose from {sorted(OBJECTIVES)}") from None


def _search_batches(n, field_name, batches) -> ExtremalResult:
    lo = hi = None
    lo_codes: list[np.ndarray] = []
    hi_codes: list[np.ndarray] = []
    examined = 0
    for b in batches:
        if not len(b):
            continue
        examined += len(b)
        vals = getattr(b, field_name)
        bmin, bmax = int(vals.min()), int(vals.max())
        if lo is None or bmin < lo:
            lo, lo_codes = bmin, []
        if bmin == lo:
            lo_codes.append(b.codes[vals == lo])
        if hi is None or bmax > hi:
            hi, hi_codes = bmax, []
        if bmax == hi:
            hi_codes.append(b.codes[vals == hi])

    def graphs(code_lists):
        return (batch.graph_from_code(int(c), n) for arr in code_lists for c in arr)

    return ExtremalResult(
        objective="", n=n, examined=examined,
        min_value=lo, min_witnesses=_witness_codes(graphs(lo_codes)),
        max_value=hi, max_witnesses=_witness_codes(graphs(hi_codes)),
    )


def _search_graphs(graphs: Iterable[Graph], value_of: Callable[[Graph], int]) -> ExtremalResult:
    lo = hi = None
    lo_w: list[Graph] = []
    hi_w: list[Graph] = []
    examined = 0
    for g in graphs:
        examined += 1
        val = value_of(g)
        if lo is None or val < lo:
            lo, lo_w = val, []
        if val == lo:
            lo_w.append(g)
        if hi is None or val > hi:
            hi, hi_w = val, []
        if val == hi:
            hi_w.append(g)
    return ExtremalResult(
        objective="", n=None, examined=examined,
        min_value=lo, min_witnesses=_witness_codes(lo_w),
        max_value=hi, max_witnesses=_witness_codes(hi_w),
    )


def extremal_search(
    n: int | None,
    objective: str = "pi_w",
    dedupe: bool = False,
    source: str | None = None,
) -> ExtremalResult:
    """Exact minimum and maximum of ``objective`` with all witnesses.

    Internal labeled search runs on the vectorized evaluator; witnesses are
    always reported once per isomorphism class, canonically labeled, as
    graph6. ``examined`` counts labeled graphs, or classes when ``dedupe``.
    """
    field_name = _objective_field(objective)
    config = EnumerationConfig(n=n, dedupe=dedupe, source=source)
    if source is not None:
        stats = IngestStats()
        stream = ingest_graph6_stream(source, stats)
        if n is not None:
            stream = (g for g in stream if g.n == n)
        if dedupe:
            stream = _dedupe(stream)
        result = _search_graphs(stream, lambda g: getattr(compute_indices(g), field_name))
        result.skipped_disconnected = stats.skipped_disconnected
        result.n = n
    elif dedupe:
        reps = list(enumerate_connected(config))
        values = getattr(batch.evaluate_graphs(reps), field_name)
        lookup = {g: int(v) for g, v in zip(reps, values)}
        result = _search_graphs(reps, lookup.__getitem__)
        result.n = n
    else:
        result = _search_batches(n, field_name, batch.iter_labeled(n))
    result.objective = objective
    return result


def _dedupe(graphs: Iterable[Graph]) -> Iterator[Graph]:
    seen = set()
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g
