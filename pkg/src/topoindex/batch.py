"""Vectorized index evaluation over stacks of small graphs.

This is the engine behind exhaustive labeled sweeps. A labeled graph on
``n`` vertices is an integer *code* of ``K = n(n-1)/2`` bits. Pair ``k`` of
the row-major upper triangle ``(0,1), (0,2), ..., (n-2,n-1)`` is stored in
bit ``K-1-k``, so the ``n-1`` pairs at vertex 0 are the high bits and each
aligned block of ``2**(K-n+1)`` codes shares one neighborhood of vertex 0.

Distances come from repeated boolean matrix products instead of BFS, and
per-edge counts from broadcasting comparisons, so this path shares no code
with :mod:`topoindex.graph` and serves as its cross-check.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph

DEFAULT_CHUNK = 1 << 15


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _pairs(n: int):
    return np.triu_indices(n, 1)


def worker_count() -> int:
    """Thread cap from TOPOINDEX_THREADS, else the CPU count."""
    raw = os.environ.get("TOPOINDEX_THREADS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def adjacency_from_codes(codes: np.ndarray, n: int) -> np.ndarray:
    iu, ju = _pairs(n)
    k = len(iu)
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
    bits = ((codes[:, None] >> shifts) & 1).astype(np.uint8)
    adj = np.zeros((len(codes), n, n), dtype=np.uint8)
    adj[:, iu, ju] = bits
    adj[:, ju, iu] = bits
    return adj


def code_of(g: Graph) -> int:
    iu, ju = _pairs(g.n)
    k = len(iu)
    return sum(1 << (k - 1 - idx) for idx, (i, j) in enumerate(zip(iu, ju)) if g.has_edge(int(i), int(j)))


def graph_from_code(code: int, n: int) -> Graph:
    iu, ju = _pairs(n)
    k = len(iu)
    edges = [(int(i), int(j)) for idx, (i, j) in enumerate(zip(iu, ju)) if (code >> (k - 1 - idx)) & 1]
    return Graph.unchecked(n, edges)


def adjacency_from_graphs(graphs: Sequence[Graph]) -> np.ndarray:
    n = graphs[0].n
    adj = np.zeros((len(graphs), n, n), dtype=np.uint8)
    for b, g in enumerate(graphs):
        if g.n != n:
            raise ValueError("all graphs in a batch must have the same order")
        for u, v in g.edges():
            adj[b, u, v] = adj[b, v, u] = 1
    return adj


def distances(adj: np.ndarray) -> np.ndarray:
    """All-pairs distances; ``n`` (an impossible distance) marks unreachable."""
    b, n, _ = adj.shape
    dist = np.full((b, n, n), n, dtype=np.int16)
    reach = np.broadcast_to(np.eye(n, dtype=bool), (b, n, n)).copy()
    dist[reach] = 0
    a = adj.astype(np.float32)
    for step in range(1, n):
        grown = (np.matmul(reach.astype(np.float32), a) > 0) | reach
        new = grown & ~reach
        if not new.any():
            break
        dist[new] = step
        reach = grown
    return dist


@dataclass
class BatchIndices:
    """Index arrays for a stack of connected graphs of one order."""

    n: int
    codes: np.ndarray | None
    m: np.ndarray
    wiener: np.ndarray
    zagreb_m1: np.ndarray
    zagreb_m2: np.ndarray
    pi_v: np.ndarray
    szeged: np.ndarray
    pi_w: np.ndarray
    sz_w: np.ndarray
    triangle_total: np.ndarray
    triangle_sq_sum: np.ndarray
    is_bipartite: np.ndarray
    diameter: np.ndarray
    edge_inequalities_ok: np.ndarray

    def __len__(self):
        return len(self.m)

    def take(self, mask: np.ndarray) -> "BatchIndices":
        out = {}
        for f in fields(self):
            val = getattr(self, f.name)
            out[f.name] = val[mask] if isinstance(val, np.ndarray) else val
        return BatchIndices(**out)

    @classmethod
    def concat(cls, parts: Sequence["BatchIndices"], n: int) -> "BatchIndices":
        out = {"n": n}
        for f in fields(cls):
            if f.name == "n":
                continue
            vals = [getattr(p, f.name) for p in parts]
            out[f.name] = None if any(v is None for v in vals) else np.concatenate(vals)
        return cls(**out)


def _total(x: np.ndarray) -> np.ndarray:
    return x.sum(axis=(1, 2), dtype=np.int64)


def evaluate(adj: np.ndarray, codes: np.ndarray | None = None) -> BatchIndices:
    """Indices of the connected graphs in ``adj``; disconnected ones are dropped.

    Intermediates are int32, which is exact far beyond the n <= 8 sweeps.
    """
    n = adj.shape[1]
    dist = distances(adj)
    connected = (dist < n).all(axis=(1, 2))
    adj, dist = adj[connected], dist[connected]
    if codes is not None:
        codes = codes[connected]

    a = adj.astype(np.int32)
    deg = a.sum(axis=2)
    degsum = deg[:, :, None] + deg[:, None, :]
    # closer[b, u, v] = #{x : d(x, u) < d(x, v)}
    closer = (dist[:, :, :, None] < dist[:, :, None, :]).sum(axis=1, dtype=np.int32)
    closer_t = closer.transpose(0, 2, 1)
    common = np.matmul(a, a)

    # ordered-pair sums count each edge twice unless the summand is one-sided
    pi_v = _total(a * closer)
    pi_w = _total(a * degsum * closer)
    szeged = _total(a * closer * closer_t) // 2
    sz_w = _total(a * degsum * closer * closer_t) // 2

    pair_sum = closer + closer_t
    ok_pi = np.where(adj > 0, pair_sum <= n - common, True).all(axis=(1, 2))
    ok_deg = np.where(adj > 0, degsum <= n + common, True).all(axis=(1, 2))

    layer = dist[:, 0, :]
    same_layer = layer[:, :, None] == layer[:, None, :]
    bipartite = ~((adj > 0) & same_layer).any(axis=(1, 2))

    return BatchIndices(
        n=n,
        codes=codes,
        m=_total(a) // 2,
        wiener=_total(dist) // 2,
        zagreb_m1=(deg * deg).sum(axis=1, dtype=np.int64),
        zagreb_m2=_total(a * deg[:, :, None] * deg[:, None, :]) // 2,
        pi_v=pi_v,
        szeged=szeged,
        pi_w=pi_w,
        sz_w=sz_w,
        triangle_total=_total(a * common) // 6,
        triangle_sq_sum=_total(a * common * common) // 2,
        is_bipartite=bipartite,
        diameter=dist.max(axis=(1, 2)).astype(np.int64),
        edge_inequalities_ok=ok_pi & ok_deg,
    )


def evaluate_graphs(graphs: Sequence[Graph]) -> BatchIndices:
    return evaluate(adjacency_from_graphs(graphs))


def _evaluate_range(n: int, start: int, stop: int) -> BatchIndices:
    codes = np.arange(start, stop, dtype=np.int64)
    return evaluate(adjacency_from_codes(codes, n), codes)


def iter_labeled(n: int, chunk: int = DEFAULT_CHUNK, threads: int | None = None) -> Iterator[BatchIndices]:
    """Evaluate every connected labeled graph on ``n`` vertices, chunk by chunk.

    Chunks are yielded in code order regardless of the thread count.
    """
    total = 1 << pair_count(n)
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    threads = threads or worker_count()
    if threads <= 1 or len(ranges) == 1:
        for s, e in ranges:
            yield _evaluate_range(n, s, e)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(lambda r: _evaluate_range(n, *r), ranges)
