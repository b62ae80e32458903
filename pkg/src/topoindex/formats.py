"""graph6 and edge-list encodings.

graph6 follows the nauty definition: a size header N(n) followed by the
upper triangle of the adjacency matrix, read column by column
(``x[0,1], x[0,2], x[1,2], x[0,3], ...``), packed six bits per byte,
most significant bit first, each byte offset by 63. Padding bits are zero.
The parser is strict so that ``encode(decode(s)) == s`` for every string it
accepts.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, TextIO

from .errors import ParseError
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) != width:
        raise ParseError("truncated graph6 size header")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    if (width == 3 and n <= 62) or (width == 6 and n <= 258047):
        raise ParseError(f"non-minimal graph6 size header for n={n}")
    return n, start + width


def write_graph6(g: Graph) -> str:
    """graph6 string of ``g`` (no header, no trailing newline)."""
    n = g.n
    nbrs = g.neighbor_sets()
    out = [_encode_size(n)]
    acc = nbits = 0
    for j in range(1, n):
        row = nbrs[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def read_graph6(text: str) -> Graph:
    """Decode one graph6 string into a (possibly disconnected) Graph."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if s[:1] == ":" or s[:1] == "&":
        raise ParseError("sparse6 and digraph6 are not supported")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be printable ASCII") from None
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 byte outside the range 63..126")
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise ParseError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.unchecked(n, edges)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line."""
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s:
            continue
        try:
            yield lineno, read_graph6(s)
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format into a connected Graph."""
    rows = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.strip():
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list", line=1)
    lineno, head = rows[0]
    n, m = _ints(head, lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges but {len(rows) - 1} follow", line=lineno)
    edges = [_ints(fields, ln) for ln, fields in rows[1:]]
    return build_graph(n, edges)


def _ints(fields: list[str], lineno: int) -> tuple[int, int]:
    if len(fields) != 2:
        raise ParseError(f"expected two integers, got {len(fields)} fields", line=lineno)
    try:
        a, b = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"non-integer field in {fields!r}", line=lineno) from None
    if a < 0 or b < 0:
        raise ParseError("negative value", line=lineno)
    return a, b


def from_labeled_edges(edges: Iterable[tuple[Hashable, Hashable]]) -> tuple[Graph, dict]:
    """Build a connected Graph from arbitrary vertex labels.

    Labels are numbered in order of first appearance. Returns the graph and
    the label-to-id map.
    """
    ids: dict = {}
    pairs = []
    for a, b in edges:
        for x in (a, b):
            if x not in ids:
                ids[x] = len(ids)
        pairs.append((ids[a], ids[b]))
    return build_graph(len(ids), pairs), ids


def read_graph_file(fh: TextIO) -> list[Graph]:
    """Read either an edge-list file or a file of graph6 lines."""
    text = fh.read()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    fields = first.split()
    if len(fields) == 2 and all(f.isdigit() for f in fields):
        return [read_edge_list(text)]
    return [g for _, g in iter_graph6_lines(text.splitlines())]
