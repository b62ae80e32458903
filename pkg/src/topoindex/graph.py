"""Immutable simple graphs, BFS distances and per-edge counts.

Vertices are the dense integers ``0..n-1``. Every index in the package is
computed from :func:`edge_stats`, which pairs each edge ``uv`` with the
number of vertices strictly closer to ``u`` (``n_u``), strictly closer to
``v`` (``n_v``) and the number of triangles through the edge (``t_e``).
Vertices at equal distance from both endpoints count for neither side.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    SelfLoop,
    SizeTooSmall,
    VertexOutOfRange,
)

#: Above this vertex count edge_stats runs two BFS per edge instead of
#: holding the full distance matrix.
MATRIX_THRESHOLD = 4096


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable. Use :func:`build_graph` for
    validated, connected input; :meth:`Graph.unchecked` skips validation and
    the connectivity requirement and is meant for enumeration internals and
    file parsers.
    """

    __slots__ = ("n", "adj", "m", "_nbr_sets", "_connected")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.m = sum(len(a) for a in self.adj) // 2
        self._nbr_sets = None
        self._connected = None

    @classmethod
    def unchecked(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbor_sets(self) -> tuple[frozenset, ...]:
        if self._nbr_sets is None:
            self._nbr_sets = tuple(frozenset(a) for a in self.adj)
        return self._nbr_sets

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets()[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def is_connected(self) -> bool:
        if self._connected is None:
            self._connected = self.n >= 1 and min(bfs_distances(self, 0)) >= 0
        return self._connected

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.unchecked(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


class EdgeStats(NamedTuple):
    u: int
    v: int
    deg_u: int
    deg_v: int
    n_u: int
    n_v: int
    t_e: int


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edges`` and return a connected :class:`Graph`.

    Raises SizeTooSmall, VertexOutOfRange, SelfLoop, DuplicateEdge or
    Disconnected.
    """
    if n < 1:
        raise SizeTooSmall(f"a graph needs at least one vertex, got n={n}")
    seen = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
    g = Graph.unchecked(n, seen)
    require_connected(g)
    return g


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise Disconnected(f"graph on {g.n} vertices is not connected")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Unweighted distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs distances as ``n`` BFS rows."""
    return [bfs_distances(g, s) for s in range(g.n)]


def layers(g: Graph, v: int) -> list[frozenset]:
    """Partition of the vertices by distance from ``v``: entry i holds L_i(v)."""
    dist = bfs_distances(g, v)
    out = [set() for _ in range(max(dist) + 1)]
    for x, d in enumerate(dist):
        if d >= 0:
            out[d].add(x)
    return [frozenset(s) for s in out]


def eccentricity(g: Graph, v: int) -> int:
    require_connected(g)
    return max(bfs_distances(g, v))


def diameter(g: Graph) -> int:
    require_connected(g)
    return max(max(bfs_distances(g, s)) for s in range(g.n))


def _closer_counts(du: Sequence[int], dv: Sequence[int]) -> tuple[int, int]:
    n_u = n_v = 0
    for a, b in zip(du, dv):
        if a < b:
            n_u += 1
        elif b < a:
            n_v += 1
    return n_u, n_v


def edge_stats(
    g: Graph,
    matrix_threshold: int = MATRIX_THRESHOLD,
    rows: Sequence[Sequence[int]] | None = None,
) -> list[EdgeStats]:
    """One :class:`EdgeStats` record per edge, in :meth:`Graph.edges` order.

    ``rows`` may carry a precomputed distance matrix; otherwise one is built
    when ``n <= matrix_threshold`` and two BFS runs per edge are used above it.
    """
    require_connected(g)
    nbrs = g.neighbor_sets()
    if rows is None and g.n <= matrix_threshold:
        rows = distance_matrix(g)
    out = []
    for u, v in g.edges():
        if rows is not None:
            du, dv = rows[u], rows[v]
        else:
            du, dv = bfs_distances(g, u), bfs_distances(g, v)
        n_u, n_v = _closer_counts(du, dv)
        out.append(EdgeStats(u, v, len(nbrs[u]), len(nbrs[v]), n_u, n_v, len(nbrs[u] & nbrs[v])))
    return out


def triangle_total(g: Graph) -> int:
    """Number of triangles; each is seen once from each of its three edges."""
    nbrs = g.neighbor_sets()
    per_edge = sum(len(nbrs[u] & nbrs[v]) for u, v in g.edges())
    assert per_edge % 3 == 0
    return per_edge // 3
