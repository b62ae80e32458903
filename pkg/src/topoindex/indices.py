"""Distance- and degree-based topological indices, computed exactly.

All entry points take a connected :class:`~topoindex.graph.Graph` and
return Python ints range-checked to int64. :func:`compute_indices` builds
every index from a single distance matrix; the per-index functions exist
for library callers who only need one number.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import asdict, dataclass, fields
from typing import NamedTuple

from .errors import checked
from .graph import (
    EdgeStats,
    Graph,
    bfs_distances,
    distance_matrix,
    edge_stats,
    require_connected,
)

CSV_FIELDS = (
    "n", "m", "diameter", "is_bipartite", "wiener", "zagreb_m1", "zagreb_m2",
    "pi_v", "szeged", "pi_w", "sz_w", "triangle_total",
)


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    wiener: int
    zagreb_m1: int
    zagreb_m2: int
    pi_v: int
    szeged: int
    pi_w: int
    sz_w: int
    triangle_total: int
    is_bipartite: bool
    diameter: int

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_row(self) -> list:
        d = self.to_dict()
        d["is_bipartite"] = "true" if self.is_bipartite else "false"
        return [d[k] for k in CSV_FIELDS]


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


assert set(CSV_FIELDS) == {f.name for f in fields(IndexReport)}


class VertexContribution(NamedTuple):
    vertex: int
    w_x: int
    m_x: int


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of BFS 2-coloring: a coloring, or an odd cycle as witness."""

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.bipartite


def wiener(g: Graph) -> int:
    """Sum of d(u, v) over unordered vertex pairs."""
    require_connected(g)
    return checked(sum(sum(bfs_distances(g, s)) for s in range(g.n)) // 2)


def zagreb_m1(g: Graph) -> int:
    return checked(sum(d * d for d in g.degrees()))


def zagreb_m2(g: Graph) -> int:
    deg = g.degrees()
    return checked(sum(deg[u] * deg[v] for u, v in g.edges()))


def pi_v(g: Graph) -> int:
    return _pi_v(edge_stats(g))


def szeged(g: Graph) -> int:
    return _szeged(edge_stats(g))


def pi_w(g: Graph) -> int:
    return _pi_w(edge_stats(g))


def sz_w(g: Graph) -> int:
    return _sz_w(edge_stats(g))


# Terms are nonnegative, so range-checking the total covers every partial sum.
def _pi_v(stats: list[EdgeStats]) -> int:
    return checked(sum(e.n_u + e.n_v for e in stats))


def _szeged(stats: list[EdgeStats]) -> int:
    return checked(sum(e.n_u * e.n_v for e in stats))


def _pi_w(stats: list[EdgeStats]) -> int:
    return checked(sum((e.deg_u + e.deg_v) * (e.n_u + e.n_v) for e in stats))


def _sz_w(stats: list[EdgeStats]) -> int:
    return checked(sum((e.deg_u + e.deg_v) * e.n_u * e.n_v for e in stats))


def vertex_contributions(g: Graph) -> list[VertexContribution]:
    """Per-vertex share of PI_w and PI_v.

    For vertex x, ``w_x`` sums deg(u) + deg(v) over the edges uv with
    d(x, u) != d(x, v), and ``m_x`` counts those edges. One BFS row is held
    at a time.
    """
    require_connected(g)
    deg = g.degrees()
    edges = [(u, v, deg[u] + deg[v]) for u, v in g.edges()]
    out = []
    for x in range(g.n):
        row = bfs_distances(g, x)
        w = m = 0
        for u, v, weight in edges:
            if row[u] != row[v]:
                w += weight
                m += 1
        out.append(VertexContribution(x, checked(w), m))
    return out


def is_bipartite(g: Graph) -> BipartiteCheck:
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(parent, x, y))
    return BipartiteCheck(True, coloring=tuple(color))


def _odd_cycle(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    # x and y share a BFS depth, so climbing in lockstep meets at their LCA
    left, right = [x], [y]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


def compute_indices(g: Graph) -> IndexReport:
    """Every index of ``g`` from one distance matrix and one edge pass."""
    require_connected(g)
    rows = distance_matrix(g)
    stats = edge_stats(g, rows=rows)
    return IndexReport(
        n=g.n,
        m=g.m,
        wiener=checked(sum(map(sum, rows)) // 2),
        zagreb_m1=zagreb_m1(g),
        zagreb_m2=checked(sum(e.deg_u * e.deg_v for e in stats)),
        pi_v=_pi_v(stats),
        szeged=_szeged(stats),
        pi_w=_pi_w(stats),
        sz_w=_sz_w(stats),
        triangle_total=sum(e.t_e for e in stats) // 3,
        is_bipartite=is_bipartite(g).bipartite,
        diameter=max(map(max, rows)),
    )
