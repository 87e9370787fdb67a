"""Exact exponential-time ground truth: alpha, omega, maximum stable sets,
minimum hitting sets, colourings and perfection.

All searches branch on the lowest candidate vertex, include-first, and prune
only branches that cannot strictly improve, so the first optimum found is the
lexicographically least one (as a sorted vertex tuple).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import (
    ColouringBudgetError,
    ColouringLimitError,
    EmptyGraphError,
    EnumerationCapError,
    PerfectionCapError,
)
from .graph import Graph, VertexSet, iter_members, lowest, members, popcount

DEFAULT_ENUM_CAP = 10**6
DEFAULT_PERFECT_CAP = 16


def _region(g: Graph, within: VertexSet | Iterable[int] | None) -> VertexSet:
    return g.full if within is None else g.check(within)


def _require_vertices(g: Graph, region: VertexSet) -> None:
    if g.n == 0:
        raise EmptyGraphError("oracles are undefined on the null graph")
    if not region:
        raise EmptyGraphError("oracles are undefined on an empty vertex set")


def _cover_bound(rows: Sequence[int], P: VertexSet) -> int:
    """Classes in a greedy partition of ``P`` into sets independent w.r.t. ``rows``.

    With ``rows`` the adjacency this bounds the clique number of ``P``; with
    the complement rows it bounds the stability number.
    """
    k = 0
    while P:
        k += 1
        Q = P
        while Q:
            v = Q & -Q
            P &= ~v
            Q &= ~rows[v.bit_length() - 1] & ~v
    return k


def _max_clique(rows: Sequence[int], cand: VertexSet) -> VertexSet:
    """Lexicographically least maximum clique of ``cand`` under ``rows``."""
    best = 0
    best_size = 0

    def go(size: int, R: int, P: int) -> None:
        nonlocal best, best_size
        if not P:
            if size > best_size:
                best, best_size = R, size
            return
        if size + popcount(P) <= best_size:
            return
        if size + _cover_bound(rows, P) <= best_size:
            return
        low = P & -P
        v = low.bit_length() - 1
        go(size + 1, R | low, P & rows[v])
        go(size, R, P & ~low)

    go(0, 0, cand)
    return best


def alpha(g: Graph, within: VertexSet | Iterable[int] | None = None) -> tuple[int, VertexSet]:
    """Stability number and the lexicographically least maximum stable set."""
    region = _region(g, within)
    _require_vertices(g, region)
    w = _max_clique(g.co_adj, region)
    assert g.is_stable(w)
    return popcount(w), w


def alpha_size(g: Graph, within: VertexSet | None = None) -> int:
    """Like :func:`alpha` but returns 0 on an empty region instead of raising."""
    region = g.full if within is None else within
    return popcount(_max_clique(g.co_adj, region)) if region else 0


def omega(g: Graph, within: VertexSet | Iterable[int] | None = None) -> tuple[int, VertexSet]:
    region = _region(g, within)
    _require_vertices(g, region)
    w = _max_clique(g.adj, region)
    assert g.is_clique(w)
    return popcount(w), w


def omega_size(g: Graph, within: VertexSet | None = None) -> int:
    region = g.full if within is None else within
    return popcount(_max_clique(g.adj, region)) if region else 0


@dataclass(frozen=True)
class StableSetFamily:
    alpha: int
    members: tuple[VertexSet, ...]

    def as_lists(self) -> list[list[int]]:
        return [members(s) for s in self.members]

    def __len__(self):
        return len(self.members)


def _enumerate_max(rows: Sequence[int], cand: VertexSet, target: int, cap: int) -> list[VertexSet]:
    out: list[VertexSet] = []

    def go(size: int, R: int, P: int) -> None:
        if size == target:
            out.append(R)
            if len(out) > cap:
                raise EnumerationCapError(f"more than {cap} maximum stable sets")
            return
        if size + popcount(P) < target or size + _cover_bound(rows, P) < target:
            return
        low = P & -P
        v = low.bit_length() - 1
        go(size + 1, R | low, P & rows[v])
        go(size, R, P & ~low)

    go(0, 0, cand)
    return out


def enumerate_maximum_stable_sets(
    g: Graph, within: VertexSet | Iterable[int] | None = None, cap: int = DEFAULT_ENUM_CAP
) -> StableSetFamily:
    """Every maximum stable set of ``G[within]``, in lexicographic order."""
    region = _region(g, within)
    a, _ = alpha(g, region)
    return StableSetFamily(a, tuple(_enumerate_max(g.co_adj, region, a, cap)))


def _packing_bound(sets: list[int], allowed: int) -> int:
    """Size of a greedy family of pairwise disjoint sets; each needs its own hitter."""
    used = 0
    k = 0
    for s in sorted((s & allowed for s in sets), key=popcount):
        if not s & used:
            used |= s
            k += 1
    return k


def min_transversal(sets: Sequence[VertexSet]) -> VertexSet:
    """Lexicographically least minimum-cardinality set meeting every member of ``sets``."""
    sets = list(sets)
    if not sets:
        return 0
    if any(s == 0 for s in sets):
        raise ValueError("an empty set cannot be hit")
    union = 0
    for s in sets:
        union |= s

    def go(unhit: list[int], allowed: int, chosen: int, budget: int) -> int | None:
        if not unhit:
            return chosen
        if budget == 0:
            return None
        if _packing_bound(unhit, allowed) > budget:
            return None
        live = 0
        for s in unhit:
            live |= s
        live &= allowed
        if not live:
            return None
        low = live & -live
        found = go([s for s in unhit if not s & low], allowed & ~low, chosen | low, budget - 1)
        if found is not None:
            return found
        rest = allowed & ~low
        if any(not s & rest for s in unhit):
            return None
        return go(unhit, rest, chosen, budget)

    k = max(1, _packing_bound(sets, union))
    while True:
        found = go(sets, union, 0, k)
        if found is not None:
            return found
        k += 1


def eta_exact(
    g: Graph, within: VertexSet | Iterable[int] | None = None, cap: int = DEFAULT_ENUM_CAP
) -> tuple[int, VertexSet]:
    """Minimum hitting set of ``G[within]`` as a transversal of its maximum stable sets."""
    fam = enumerate_maximum_stable_sets(g, within, cap)
    w = min_transversal(fam.members)
    return popcount(w), w


def verify_hitting_set(g: Graph, W: VertexSet | Iterable[int], within: VertexSet | None = None) -> bool:
    """True iff removing ``W`` lowers the stability number of ``G[within]``."""
    region = g.full if within is None else g.check(within)
    _require_vertices(g, region)
    W = g.check(W)
    return alpha_size(g, region & ~W) < alpha_size(g, region)


@dataclass
class HittingCertificate:
    W: VertexSet
    algorithm: str
    params: dict[str, Any]
    claimed_bound: int
    alpha_before: int
    alpha_after: int
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return popcount(self.W)

    @property
    def vertices(self) -> list[int]:
        return members(self.W)

    @property
    def verified(self) -> bool:
        return self.alpha_after < self.alpha_before

    @property
    def within_bound(self) -> bool:
        return self.size <= self.claimed_bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "W": self.vertices,
            "size": self.size,
            "algorithm": self.algorithm,
            "params": dict(self.params),
            "claimed_bound": self.claimed_bound,
            "alpha_before": self.alpha_before,
            "alpha_after": self.alpha_after,
            "verified": self.verified,
        }


def certify(g: Graph, W: VertexSet, algorithm: str, params: dict[str, Any], claimed_bound: int) -> HittingCertificate:
    """Wrap ``W`` with independently recomputed alpha before and after removal."""
    _require_vertices(g, g.full)
    return HittingCertificate(
        W=W,
        algorithm=algorithm,
        params=params,
        claimed_bound=claimed_bound,
        alpha_before=alpha_size(g),
        alpha_after=alpha_size(g, g.full & ~W),
    )


# -- colouring ---------------------------------------------------------------


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colour = [-1] * n
    sat = [0] * n
    deg = [popcount(r) for r in g.adj]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (popcount(sat[u]), deg[u], -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colour[v] = c
        for u in iter_members(g.adj[v]):
            sat[u] |= 1 << c
    return colour


def _classes(colour: list[int]) -> list[VertexSet]:
    k = max(colour, default=-1) + 1
    classes = [0] * k
    for v, c in enumerate(colour):
        classes[c] |= 1 << v
    return sorted((c for c in classes if c), key=lowest)


def exact_colouring(g: Graph, limit: int | None = None, node_budget: int | None = None) -> list[VertexSet]:
    """Minimum proper colouring by DSATUR branch and bound.

    Classes are returned sorted by least member. With ``limit``, raise
    :class:`ColouringLimitError` as soon as the chromatic number is known to
    exceed it. With ``node_budget``, raise :class:`ColouringBudgetError`
    (carrying the best colouring so far) when the search tree grows too large.
    """
    if g.n == 0:
        raise EmptyGraphError("cannot colour the null graph")
    lower, _ = omega(g)
    if limit is not None and lower > limit:
        raise ColouringLimitError(f"clique of size {lower} exceeds colour limit {limit}", lower)
    greedy = _dsatur_greedy(g)
    best = list(greedy)
    best_k = max(greedy) + 1
    if best_k == lower:
        return _classes(best)

    n = g.n
    adj = g.adj
    deg = [popcount(r) for r in adj]
    colour = [-1] * n
    sat = [0] * n
    nodes = 0

    def pick() -> int:
        bv, bkey = -1, None
        for u in range(n):
            if colour[u] < 0:
                key = (popcount(sat[u]), deg[u], -u)
                if bkey is None or key > bkey:
                    bv, bkey = u, key
        return bv

    def go(done: int, used: int) -> bool:
        nonlocal best, best_k, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise ColouringBudgetError(f"exact colouring exceeded {node_budget} nodes", _classes(best))
        if done == n:
            best, best_k = list(colour), used
            return best_k == lower
        v = pick()
        options = [c for c in range(used) if not sat[v] >> c & 1]
        if used + 1 < best_k:
            options.append(used)
        for c in options:
            if max(used, c + 1) >= best_k:
                continue
            colour[v] = c
            touched = [u for u in iter_members(adj[v]) if colour[u] < 0 and not sat[u] >> c & 1]
            for u in touched:
                sat[u] |= 1 << c
            stop = go(done + 1, max(used, c + 1))
            for u in touched:
                sat[u] &= ~(1 << c)
            colour[v] = -1
            if stop:
                return True
        return False

    go(0, 0)
    if limit is not None and best_k > limit:
        raise ColouringLimitError(f"chromatic number {best_k} exceeds colour limit {limit}", best_k)
    return _classes(best)


# -- perfection --------------------------------------------------------------


def _subset_tables(g: Graph) -> tuple[list[int], list[int]]:
    """alpha and omega of every induced subgraph, indexed by vertex mask."""
    size = 1 << g.n
    a = [0] * size
    w = [0] * size
    adj, co = g.adj, g.co_adj
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        a[mask] = max(a[rest], 1 + a[rest & co[v]])
        w[mask] = max(w[rest], 1 + w[rest & adj[v]])
    return a, w


def lovasz_violation(g: Graph, cap: int = DEFAULT_PERFECT_CAP) -> VertexSet | None:
    """Smallest (then lexicographically least) vertex set ``S`` with
    ``alpha(G[S]) * omega(G[S]) < |S|``, or ``None`` if there is none."""
    if g.n > cap:
        raise PerfectionCapError(f"perfection check capped at n={cap}, got n={g.n}")
    if g.n == 0:
        return None
    a, w = _subset_tables(g)
    best = None
    best_key = None
    for mask in range(1, 1 << g.n):
        pc = popcount(mask)
        if a[mask] * w[mask] < pc:
            key = (pc, members(mask))
            if best_key is None or key < best_key:
                best, best_key = mask, key
    return best


def is_perfect_lovasz(g: Graph, cap: int = DEFAULT_PERFECT_CAP) -> bool:
    return lovasz_violation(g, cap) is None


def union_lower_bound(sizes: Sequence[int], pairwise: Sequence[Sequence[int]]) -> int:
    """Sum of sizes minus the sum of pairwise intersection sizes over ``i < j``."""
    s = len(sizes)
    if s < 2:
        raise ValueError("need at least two sets")
    if len(pairwise) != s or any(len(row) != s for row in pairwise):
        raise ValueError("pairwise matrix must be s x s")
    total = sum(sizes)
    for i in range(s):
        for j in range(i + 1, s):
            if pairwise[i][j] != pairwise[j][i]:
                raise ValueError("pairwise matrix must be symmetric")
            total -= pairwise[i][j]
    return total
