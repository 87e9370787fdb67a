"""Bit-exact graph6 encoding, plus a plain edge-list text format."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 parse errors."""


class Graph6HeaderError(Graph6Error):
    """The size header is missing or malformed."""


class Graph6CharError(Graph6Error):
    """A byte outside the printable range 63..126."""


class Graph6LengthError(Graph6Error):
    """Too few adjacency bytes, or trailing bytes after the adjacency data."""


def _size_bytes(n: int) -> list[int]:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError("graph too large for graph6")


def encode(g: Graph) -> str:
    out = _size_bytes(g.n)
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(b + 63) for b in out)


def _parse_size(data: list[int]) -> tuple[int, int]:
    if not data:
        raise Graph6HeaderError("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6HeaderError("truncated 8-byte size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        return n, 8
    if len(data) < 4:
        raise Graph6HeaderError("truncated 4-byte size header")
    return (data[1] << 12) | (data[2] << 6) | data[3], 4


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    data = []
    for pos, ch in enumerate(text):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6CharError(f"byte {o!r} at offset {pos} is not a graph6 character")
        data.append(o - 63)
    n, start = _parse_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} adjacency bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6LengthError(f"{len(body) - need} trailing byte(s) after adjacency data")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(stream: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for non-blank lines; errors carry the line."""
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, decode(line)
        except Graph6Error as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None


def write_graph6_lines(graphs: Iterable[Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(encode(g) + "\n")


def parse_edge_list(text: str) -> Graph:
    """``n m`` header then ``m`` lines of ``u v``; ``#`` starts a comment."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    if not tokens or len(tokens[0]) != 2:
        raise ValueError("edge list must start with an 'n m' header")
    n, m = (int(x) for x in tokens[0])
    pairs = tokens[1:]
    if len(pairs) != m:
        raise ValueError(f"header promises {m} edges, found {len(pairs)}")
    edges = []
    for p in pairs:
        if len(p) != 2:
            raise ValueError(f"bad edge line {' '.join(p)!r}")
        edges.append((int(p[0]), int(p[1])))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
