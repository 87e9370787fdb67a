"""Immutable bit-indexed simple graphs.

Vertices are the integers ``0..n-1``. A vertex set is a plain ``int`` used as a
bitmask (bit ``v`` set means ``v`` is a member); the alias :data:`VertexSet`
documents that intent in signatures. Every public function that accepts a
vertex set also accepts any iterable of vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

VertexSet = int


class GraphError(ValueError):
    """Malformed graph or out-of-range vertex reference."""


def bit(v: int) -> int:
    return 1 << v


def members(mask: VertexSet) -> list[int]:
    """Members of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    if not mask:
        raise GraphError("empty vertex set has no lowest member")
    return (mask & -mask).bit_length() - 1


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def to_mask(vertices: VertexSet | Iterable[int]) -> VertexSet:
    if isinstance(vertices, int):
        if vertices < 0:
            raise GraphError("vertex mask must be non-negative")
        return vertices
    m = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex index {v}")
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with adjacency rows as bitmasks."""

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = self.full
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    # -- basic queries ----------------------------------------------------

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def co_adj(self) -> tuple[int, ...]:
        full = self.full
        return tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj))

    def complement(self) -> Graph:
        return Graph(self.n, self.co_adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, within: VertexSet | None = None) -> int:
        row = self.adj[v]
        return popcount(row if within is None else row & within)

    def check(self, vertices: VertexSet | Iterable[int]) -> VertexSet:
        """Convert to a mask and reject members outside ``0..n-1``."""
        mask = to_mask(vertices)
        if mask & ~self.full:
            bad = members(mask & ~self.full)
            raise GraphError(f"vertices {bad} out of range for n={self.n}")
        return mask

    def is_stable(self, mask: VertexSet) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_members(mask))

    def is_clique(self, mask: VertexSet) -> bool:
        return all(not (self.co_adj[v] & mask) for v in iter_members(mask))

    def induced(self, mask: VertexSet | Iterable[int]) -> tuple[Graph, list[int]]:
        """Materialize ``G[mask]``; returns the subgraph and new-to-old labels."""
        mask = self.check(mask)
        old = members(mask)
        index = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            r = 0
            for u in iter_members(self.adj[v] & mask):
                r |= 1 << index[u]
            rows.append(r)
        return Graph(len(old), tuple(rows)), old

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in iter_members(self.adj[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, tuple(rows))

    def __len__(self) -> int:
        return self.n


def lift(mask: VertexSet, labels: Sequence[int]) -> VertexSet:
    """Map a mask over an induced subgraph back to the parent's labels."""
    out = 0
    for v in iter_members(mask):
        out |= 1 << labels[v]
    return out


def neighbourhood_of_set(g: Graph, X: VertexSet | Iterable[int], closed: bool = False) -> VertexSet:
    """Vertices outside ``X`` with a neighbour in ``X``; with ``closed`` also ``X``."""
    X = g.check(X)
    nb = 0
    for v in iter_members(X):
        nb |= g.adj[v]
    nb &= ~X
    return nb | X if closed else nb


def reach(g: Graph, start: int, within: VertexSet) -> VertexSet:
    """Vertices of ``within`` reachable from ``start`` inside ``G[within | start]``."""
    seen = 1 << start
    frontier = seen
    within |= seen
    while frontier:
        nxt = 0
        for v in iter_members(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components_within(g: Graph, X: VertexSet | Iterable[int]) -> list[VertexSet]:
    """Connected components of ``G[X]``, ordered by least member."""
    rest = g.check(X)
    out = []
    while rest:
        comp = reach(g, lowest(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def component_of(g: Graph, v: int, within: VertexSet | None = None) -> VertexSet:
    return reach(g, v, g.full if within is None else within)


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    region = g.full if within is None else within
    if not region:
        return True
    return reach(g, lowest(region), region) == region


def induced_path_with_interior_in(g: Graph, z: int, z2: int, W: VertexSet | Iterable[int]) -> bool:
    """Whether some induced ``z``-``z2`` path has all interior vertices in ``W``.

    A shortest path inside ``G[W | {z, z2}]`` is induced, so connectivity there
    decides the question.
    """
    if z == z2:
        raise GraphError("path endpoints must be distinct")
    W = g.check(W)
    if (W >> z & 1) or (W >> z2 & 1):
        raise GraphError("endpoints must lie outside the interior region")
    if g.has_edge(z, z2):
        return True
    return bool(reach(g, z, W | (1 << z2)) >> z2 & 1)
