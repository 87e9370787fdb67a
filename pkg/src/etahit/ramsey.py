"""Constructive clique-or-stable-set extraction with the ``c^s`` vertex bound."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, VertexSet, iter_members, lowest, members, popcount


class Kind(str, Enum):
    CLIQUE = "clique"
    STABLE = "stable"


@dataclass(frozen=True)
class RamseyOutcome:
    kind: Kind
    witness: VertexSet

    @property
    def vertices(self) -> list[int]:
        return members(self.witness)


def greedy_maximal_clique(g: Graph, within: VertexSet) -> VertexSet:
    K = 0
    cand = within
    while cand:
        low = cand & -cand
        K |= low
        cand &= g.adj[low.bit_length() - 1]
    return K


def ramsey_extract(g: Graph, c: int, s: int, within: VertexSet | None = None) -> RamseyOutcome:
    """Return a clique of size ``c`` or a stable set of size ``s``.

    Needs at least ``c**s`` vertices. A greedy maximal clique ``K`` covers the
    graph by the closed non-neighbourhoods of its members; if ``K`` is too
    small, one of those non-neighbourhoods has ``c**(s-1)`` vertices and we
    recurse there, then add the excluded clique vertex to the stable set.
    """
    if c < 1 or s < 1:
        raise ValueError("c and s must be >= 1")
    region = g.full if within is None else g.check(within)
    if popcount(region) < c**s:
        raise ValueError(f"need at least {c}^{s} = {c**s} vertices, got {popcount(region)}")
    prefix = 0
    while True:
        K = greedy_maximal_clique(g, region)
        if popcount(K) >= c:
            w = 0
            for v in members(K)[:c]:
                w |= 1 << v
            return RamseyOutcome(Kind.CLIQUE, w)
        if s == 1:
            return RamseyOutcome(Kind.STABLE, prefix | (1 << lowest(region)))
        need = c ** (s - 1)
        for x in iter_members(K):
            M = region & g.co_adj[x]
            if popcount(M) >= need:
                break
        else:  # pragma: no cover - excluded by the covering argument
            raise AssertionError("no non-neighbourhood reached the pigeonhole bound")
        prefix |= 1 << x
        region = M
        s -= 1
