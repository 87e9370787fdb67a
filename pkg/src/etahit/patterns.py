"""Named small patterns and induced-subgraph detection."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, GraphError, iter_members, popcount


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph

    def __len__(self):
        return self.graph.n

    def __str__(self):
        return self.name


def path(t: int) -> Pattern:
    if t < 1:
        raise GraphError("P_t needs t >= 1")
    return Pattern(f"P{t}", Graph.path(t))


def star(s: int) -> Pattern:
    """K_{1,s}; vertex 0 is the centre."""
    if s < 1:
        raise GraphError("K_{1,s} needs s >= 1")
    return Pattern(f"K1,{s}", Graph.from_edges(s + 1, ((0, i) for i in range(1, s + 1))))


def sst(s: int, t: int) -> Pattern:
    """S_(s,t): a star with ``s`` leaves plus ``t`` isolated vertices."""
    if s < 1 or t < 0:
        raise GraphError("S_(s,t) needs s >= 1 and t >= 0")
    g = Graph.from_edges(1 + s + t, ((0, i) for i in range(1, s + 1)))
    return Pattern(f"S({s},{t})", g)


def ft(t: int) -> Pattern:
    """F_t: K_{1,t+1} with one edge subdivided once.

    Centre 0, leaves 1..t, subdivision vertex t+1, far end t+2.
    """
    if t < 1:
        raise GraphError("F_t needs t >= 1")
    edges = [(0, i) for i in range(1, t + 2)] + [(t + 1, t + 2)]
    return Pattern(f"F{t}", Graph.from_edges(t + 3, edges))


def lt(t: int) -> Pattern:
    """L_t: two disjoint edges plus ``t`` isolated vertices."""
    if t < 1:
        raise GraphError("L_t needs t >= 1")
    return Pattern(f"L{t}", Graph.from_edges(t + 4, [(0, 1), (2, 3)]))


def mt(t: int) -> Pattern:
    """M_t: perfect matching on ``2t`` vertices."""
    if t < 1:
        raise GraphError("M_t needs t >= 1")
    return Pattern(f"M{t}", Graph.from_edges(2 * t, ((2 * i, 2 * i + 1) for i in range(t))))


def explicit(g: Graph, name: str | None = None) -> Pattern:
    if name is None:
        from .graph6 import encode

        name = f"g6:{encode(g)}"
    return Pattern(name, g)


_SPEC = re.compile(r"^(?P<kind>[A-Za-z0-9]+?)(?::(?P<args>[-0-9,]+))?$")


def parse_pattern(text: str) -> Pattern:
    """Parse CLI pattern names: ``P5``, ``K1s:3``, ``Sst:2,1``, ``Ft:1``,
    ``Lt:1``, ``Mt:2``, ``2K2``, or ``g6:<graph6>``."""
    text = text.strip()
    if text.startswith("g6:"):
        from .graph6 import decode

        return explicit(decode(text[3:]), text)
    low = text.lower()
    if low == "2k2":
        return mt(2)
    m = re.fullmatch(r"p(\d+)", low)
    if m:
        return path(int(m.group(1)))
    m = re.fullmatch(r"k1,?(\d+)", low)
    if m:
        return star(int(m.group(1)))
    m = re.fullmatch(r"([sflm])\(?(\d+(?:,\d+)?)\)?", low)
    if m:
        # display names such as S(2,1), F1, L1, M2
        args = [int(a) for a in m.group(2).split(",")]
        short = {"s": (sst, 2), "f": (ft, 1), "l": (lt, 1), "m": (mt, 1)}[m.group(1)]
        if len(args) == short[1]:
            return short[0](*args)
    m = _SPEC.match(text)
    if not m or m.group("args") is None:
        raise ValueError(f"unknown pattern {text!r}")
    kind = m.group("kind").lower()
    try:
        args = [int(a) for a in m.group("args").split(",")]
    except ValueError:
        raise ValueError(f"bad pattern arguments in {text!r}") from None
    table = {"k1s": (star, 1), "sst": (sst, 2), "ft": (ft, 1), "lt": (lt, 1), "mt": (mt, 1), "p": (path, 1)}
    if kind not in table or len(args) != table[kind][1]:
        raise ValueError(f"unknown pattern {text!r}")
    return table[kind][0](*args)


def _search_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each is adjacent to an earlier one when possible,
    highest degree first; isolated vertices go last."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        linked = [v for v in remaining if h.adj[v] & placed]
        pool = linked or list(remaining)
        v = max(pool, key=lambda u: (popcount(h.adj[u] & placed), popcount(h.adj[u]), -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _embed(g: Graph, h: Graph, order: list[int], first_choices: int | None = None) -> tuple[int, ...] | None:
    k = h.n
    if k == 0:
        return ()
    if k > g.n:
        return None
    pos = {v: i for i, v in enumerate(order)}
    hdeg = [popcount(h.adj[v]) for v in order]
    # for each step, which earlier steps are adjacent in h
    links = [[(j, bool(h.adj[order[i]] >> order[j] & 1)) for j in range(i)] for i in range(k)]
    gdeg = [popcount(r) for r in g.adj]
    image = [0] * k
    used = 0

    def candidates(i: int) -> int:
        cand = g.full & ~used
        for j, adjacent in links[i]:
            cand &= g.adj[image[j]] if adjacent else g.co_adj[image[j]]
            if not cand:
                return 0
        return cand

    def go(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        cand = candidates(i)
        if i == 0 and first_choices is not None:
            cand &= first_choices
        for v in iter_members(cand):
            if gdeg[v] < hdeg[i]:
                continue
            image[i] = v
            used |= 1 << v
            if go(i + 1):
                return True
            used &= ~(1 << v)
        return False

    if not go(0):
        return None
    out = [0] * k
    for i, v in enumerate(order):
        out[v] = image[pos[v]]
    return tuple(out)


def find_induced_p5(g: Graph) -> tuple[int, ...] | None:
    """Induced P5 scan built outward from the middle vertex.

    Returns ``(a, b, c, d, e)`` with ``a-b-c-d-e`` induced, or ``None``.
    """
    adj, co = g.adj, g.co_adj
    for c in range(g.n):
        nc = adj[c]
        if popcount(nc) < 2:
            continue
        for b in iter_members(nc):
            # a: neighbour of b, not adjacent to c
            a_pool = adj[b] & co[c]
            if not a_pool:
                continue
            for d in iter_members(nc & co[b] & ~((1 << (b + 1)) - 1)):
                a_cands = a_pool & co[d]
                if not a_cands:
                    continue
                e_base = adj[d] & co[c] & co[b]
                if not e_base:
                    continue
                for a in iter_members(a_cands):
                    e_cands = e_base & co[a]
                    if e_cands:
                        e = (e_cands & -e_cands).bit_length() - 1
                        return (a, b, c, d, e)
    return None


def find_induced_pattern(g: Graph, p: Pattern | Graph) -> tuple[int, ...] | None:
    """An injective map (tuple indexed by pattern vertex) witnessing an induced
    copy of ``p`` in ``g``, or ``None`` if ``g`` is ``p``-free."""
    h = p.graph if isinstance(p, Pattern) else p
    if isinstance(p, Pattern) and p.name == "P5":
        return find_induced_p5(g)
    return _embed(g, h, _search_order(h))


def is_free(g: Graph, p: Pattern | Graph) -> bool:
    return find_induced_pattern(g, p) is None


def check_embedding(g: Graph, h: Graph, emb: tuple[int, ...]) -> bool:
    """Edge-by-edge check that ``emb`` maps ``h`` onto an induced copy in ``g``."""
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if h.has_edge(i, j) != g.has_edge(emb[i], emb[j]):
                return False
    return True
