"""Text formats: graph6, plain edge lists, and oriented arc lists.

graph6 follows the nauty convention: an optional ``>>graph6<<`` header,
the vertex count ``N(n)`` and the upper triangle of the adjacency matrix
in column order (``x(0,1) x(0,2) x(1,2) x(0,3) ...``), packed six bits per
printable byte offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EdgeListError, Graph6Error
from .graph import Graph, Orientation, orientation_from_bits

_HEADER = ">>graph6<<"


def _decode_n(data: bytes, start: int) -> tuple[int, int]:
    def chunk(i: int, count: int) -> int:
        if i + count > len(data):
            raise Graph6Error("truncated vertex count", len(data))
        val = 0
        for j in range(i, i + count):
            c = data[j] - 63
            if not 0 <= c < 64:
                raise Graph6Error(f"character {data[j]!r} out of range", j)
            val = (val << 6) | c
        return val

    if start >= len(data):
        raise Graph6Error("empty graph6 string", start)
    if data[start] != 126:
        return chunk(start, 1), start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        return chunk(start + 2, 6), start + 8
    return chunk(start + 1, 3), start + 4


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    pos = len(_HEADER) if data.startswith(_HEADER.encode()) else 0
    n, pos = _decode_n(data, pos)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", pos)
    edges = []
    bitpos = 0
    vals = []
    for j, ch in enumerate(body):
        c = ch - 63
        if not 0 <= c < 64:
            raise Graph6Error(f"character {ch!r} out of range", pos + j)
        vals.append(c)
    for v in range(1, n):
        for u in range(v):
            byte, off = divmod(bitpos, 6)
            if vals[byte] >> (5 - off) & 1:
                edges.append((u, v))
            bitpos += 1
    if need:
        pad = need * 6 - nbits
        if vals[-1] & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(sorted(edges)))


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> str:
    n = g.n
    nbits = n * (n - 1) // 2
    vals = [0] * ((nbits + 5) // 6)
    bitpos = 0
    for v in range(1, n):
        nb = g.adjacency[v]
        for u in range(v):
            if u in nb:
                byte, off = divmod(bitpos, 6)
                vals[byte] |= 1 << (5 - off)
            bitpos += 1
    return (_encode_n(n) + bytes(c + 63 for c in vals)).decode("ascii")


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    """Yield ``(line, graph)`` for every non-blank line of a graph6 stream."""
    for line in lines:
        line = line.strip()
        if line:
            yield line, parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """``"n m"`` header followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise EdgeListError("first line must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError as exc:
        raise EdgeListError(f"bad header: {exc}") from None
    if len(rows) - 1 != m:
        raise EdgeListError(f"header announces {m} edges, found {len(rows) - 1}")
    seen = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v'")
        u, v = int(row[0]), int(row[1])
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: vertex out of range")
        if u == v:
            raise EdgeListError(f"line {lineno}: loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def write_edge_list(g: Graph) -> str:
    return f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_arc_list(text: str) -> Orientation:
    """First line ``n``, then one ``u->v`` per line; the graph is the underlying one."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise EdgeListError("empty arc list")
    try:
        n = int(rows[0])
    except ValueError:
        raise EdgeListError("first line must be the vertex count") from None
    arcs = []
    for lineno, row in enumerate(rows[1:], start=2):
        try:
            a, b = row.split("->")
            u, v = int(a), int(b)
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected 'u->v'") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise EdgeListError(f"line {lineno}: bad arc {row}")
        arcs.append((u, v))
    g = Graph.from_edges(n, arcs)
    return Orientation.from_arcs(g, arcs)


def write_arc_list(o: Orientation) -> str:
    return f"{o.n}\n" + o.arc_lines()


def parse_orientation(g: Graph, token: str) -> Orientation:
    """Decimal mask, as written by the solver's JSON ``witness_mask``."""
    return orientation_from_bits(g, int(token))
