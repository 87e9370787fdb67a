"""Deterministic, seeded graph sources.

Randomness comes from SplitMix64 used as a counter-based generator: the bit
for edge number ``k`` is a pure function of ``(seed, k)``, so outputs do not
depend on platform, Python version or evaluation order.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import graph6
from .graph import Graph, popcount
from .patterns import Pattern, find_induced_pattern, parse_pattern

GENERATOR_NAME = "splitmix64-v1"
MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MAX_ENUM_N = 8


class GenerationError(ValueError):
    pass


def splitmix64(x: int) -> int:
    """The SplitMix64 output function applied to a 64-bit state."""
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def counter_u64(seed: int, index: int) -> int:
    """64-bit output number ``index`` of the stream keyed by ``seed``."""
    return splitmix64((seed & MASK64) + (index + 1) * GOLDEN)


def derive_seed(seed: int, tag: int) -> int:
    """An independent child seed, used for retries and sub-streams."""
    return splitmix64(splitmix64(seed ^ 0xD1B54A32D192ED03) + tag * GOLDEN)


class SplitMix64:
    """Sequential view of the counter stream."""

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.counter = 0

    def next_u64(self) -> int:
        out = counter_u64(self.seed, self.counter)
        self.counter += 1
        return out

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


def to_probability(p: Fraction | float | str | int) -> Fraction:
    """Exact probability; floats go through their shortest repr so 0.1 means 1/10."""
    if isinstance(p, float):
        p = str(p)
    q = Fraction(p)
    if not 0 <= q <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    return q


def _bernoulli(seed: int, index: int, p: Fraction) -> bool:
    return counter_u64(seed, index) * p.denominator < p.numerator << 64


def gnp(n: int, p: Fraction | float | str, seed: int) -> Graph:
    """G(n, p). Pair ``(i, j)`` with ``i < j`` uses counter ``j(j-1)/2 + i``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q = to_probability(p)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if _bernoulli(seed, k, q):
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def random_h_free(n: int, p: Fraction | float | str, seed: int, pattern: Pattern | str, max_tries: int = 1000) -> Graph:
    """Rejection-sample :func:`gnp` until the graph has no induced ``pattern``.

    Attempt ``k`` uses seed ``derive_seed(seed, k)``.
    """
    if max_tries < 1:
        raise ValueError("max_tries must be >= 1")
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    for k in range(max_tries):
        g = gnp(n, p, derive_seed(seed, k))
        if find_induced_pattern(g, pattern) is None:
            return g
    raise GenerationError(
        f"no {pattern.name}-free graph after {max_tries} tries (n={n}, p={p}); try a lower p or n"
    )


def split_graph(n_clique: int, n_stable: int, p_cross: Fraction | float | str, seed: int) -> Graph:
    """Clique on ``0..n_clique-1``, stable set after it, random edges across."""
    if n_clique < 0 or n_stable < 0:
        raise ValueError("sizes must be >= 0")
    q = to_probability(p_cross)
    edges = [(i, j) for j in range(n_clique) for i in range(j)]
    k = 0
    for u in range(n_clique):
        for v in range(n_clique, n_clique + n_stable):
            if _bernoulli(seed, k, q):
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n_clique + n_stable, edges)


def cograph(n: int, seed: int) -> Graph:
    """Random cotree: merge random pairs of parts by disjoint union or join."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = SplitMix64(seed)
    parts = [[v] for v in range(n)]
    edges = []
    while len(parts) > 1:
        a = parts.pop(rng.below(len(parts)))
        b = parts.pop(rng.below(len(parts)))
        if rng.below(2):
            edges.extend((u, v) for u in a for v in b)
        parts.append(sorted(a + b))
    return Graph.from_edges(n, edges)


# -- canonical forms and exhaustive enumeration --------------------------------


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose column-order upper-triangle bit string is least.

    Columns are fixed one at a time; each level keeps only the partial orders
    achieving the least column so far. Among interchangeable candidates
    (twins), only the lowest is tried.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    # frontier entries: (order, used mask, column value of every vertex so far)
    frontier = [((), 0, (0,) * n)]
    for _ in range(n):
        best = None
        nxt = []
        for order, used, cols in frontier:
            kept = []
            for v in range(n):
                if used >> v & 1:
                    continue
                col = cols[v]
                if best is not None and col > best:
                    continue
                row = adj[v] & ~used
                if any(cols[u] == col and row & ~(1 << u) == urow & ~(1 << v) for u, urow in kept):
                    continue
                kept.append((v, row))
                if best is None or col < best:
                    best = col
                    nxt = []
                nxt.append((order, used, cols, v))
        frontier = []
        for order, used, cols, v in nxt:
            if cols[v] != best:
                continue
            row = adj[v]
            new_cols = tuple((c << 1) | (row >> u & 1) for u, c in enumerate(cols))
            frontier.append((order + (v,), used | 1 << v, new_cols))
    return list(frontier[0][0])


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def canonical_graph6(g: Graph) -> str:
    return graph6.encode(canonical_form(g))


@lru_cache(maxsize=None)
def _small_graph6(n: int) -> tuple[str, ...]:
    if n == 0:
        return (graph6.encode(Graph.empty(0)),)
    # every graph is a smaller one plus a vertex of minimum degree, so other
    # augmentations are skipped before canonicalizing
    seen = set()
    for code in _small_graph6(n - 1):
        base = graph6.decode(code)
        degs = [base.degree(u) for u in range(n - 1)]
        for nb in range(1 << (n - 1)):
            k = popcount(nb)
            if any(degs[u] + (nb >> u & 1) < k for u in range(n - 1)):
                continue
            rows = tuple(r | ((nb >> u & 1) << (n - 1)) for u, r in enumerate(base.adj)) + (nb,)
            seen.add(canonical_graph6(Graph(n, rows)))
    return tuple(sorted(seen))


def enumerate_small_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_ENUM_N:
        raise ValueError(f"exhaustive enumeration supports n <= {MAX_ENUM_N}, got {n}")
    for code in _small_graph6(n):
        yield graph6.decode(code)


# -- serializable specs ------------------------------------------------------

KINDS = ("gnp", "hfree", "split", "cograph", "exhaustive")


@dataclass
class GenSpec:
    """A generator call. ``count`` graphs are drawn using seeds
    ``derive_seed(seed, 1000003 + i)``; with ``count == 1`` the seed is used as is."""

    kind: str
    n: int = 0
    p: str = "1/2"
    seed: int = 0
    pattern: str | None = None
    max_tries: int = 1000
    clique: int = 0
    stable: int = 0
    count: int = 1
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.n < 0 or self.clique < 0 or self.stable < 0:
            raise ValueError("sizes must be >= 0")
        if self.max_tries < 1:
            raise ValueError("max_tries must be >= 1")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        self.p = str(to_probability(self.p))
        if self.kind == "hfree":
            if not self.pattern:
                raise ValueError("hfree generator needs a pattern")
            parse_pattern(self.pattern)
        if self.kind == "cograph" and self.n < 1:
            raise ValueError("cograph needs n >= 1")
        if self.kind == "exhaustive" and self.n > MAX_ENUM_N:
            raise ValueError(f"exhaustive enumeration supports n <= {MAX_ENUM_N}")

    def seeds(self) -> list[int]:
        if self.count == 1:
            return [self.seed]
        return [derive_seed(self.seed, 1000003 + i) for i in range(self.count)]

    def graphs(self) -> Iterator[Graph]:
        if self.kind == "exhaustive":
            yield from enumerate_small_graphs(self.n)
            return
        for sd in self.seeds():
            if self.kind == "gnp":
                yield gnp(self.n, self.p, sd)
            elif self.kind == "hfree":
                yield random_h_free(self.n, self.p, sd, self.pattern, self.max_tries)
            elif self.kind == "split":
                yield split_graph(self.clique, self.stable, self.p, sd)
            else:
                yield cograph(self.n, sd)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["generator"] = GENERATOR_NAME
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> GenSpec:
        d = dict(d)
        gen = d.pop("generator", GENERATOR_NAME)
        if gen != GENERATOR_NAME:
            raise ValueError(f"unsupported generator {gen!r}")
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown GenSpec fields: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> GenSpec:
        return cls.from_dict(json.loads(text))
