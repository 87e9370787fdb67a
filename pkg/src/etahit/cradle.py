"""Cradles, rockers, restricted hitting sets and the P5-free construction.

A cradle ``(X, Z)`` is a pair of disjoint vertex sets where either ``|X| <= 1``
or every vertex of ``N_Z(X)`` has a neighbour outside ``N[X]`` and any two
vertices of ``N_Z(X)`` are joined by an induced path whose interior avoids
``N[X]``. A stable set ``S`` is ``(X, Z)``-restricted when ``S`` lies in
``X | Z`` and meets ``X``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, NamedTuple, Sequence, TypeVar

from .bounds import gamma_bound, psi_p5_bound
from .errors import BudgetExceeded, EmptyGraphError, InvariantViolation, NotInClassError
from .graph import (
    Graph,
    VertexSet,
    component_of,
    components_within,
    iter_members,
    lift,
    lowest,
    members,
    neighbourhood_of_set,
    popcount,
)
from .oracle import (
    DEFAULT_ENUM_CAP,
    HittingCertificate,
    StableSetFamily,
    certify,
    enumerate_maximum_stable_sets,
    eta_exact,
    omega,
    omega_size,
    verify_hitting_set,
)
from .patterns import find_induced_p5

log = logging.getLogger(__name__)

STRICT_P5_MAX_N = 60


class Cradle(NamedTuple):
    X: VertexSet
    Z: VertexSet


@dataclass(frozen=True)
class CradleViolation:
    kind: str  # "overlap" | "no-outside-neighbour" | "no-induced-path"
    witness: Any


@dataclass
class Trace:
    """Optional collector for structural events during a construction."""

    counts: Counter = field(default_factory=Counter)
    derived_cradles: list[tuple[Graph, Cradle]] = field(default_factory=list)
    packing_cradles: list[tuple[Graph, Cradle]] = field(default_factory=list)
    keep_cradles: bool = False

    def bump(self, key: str, n: int = 1) -> None:
        self.counts[key] += n


def check_cradle(g: Graph, X: VertexSet, Z: VertexSet) -> CradleViolation | None:
    """First violated cradle condition, or ``None`` if ``(X, Z)`` is a cradle."""
    X, Z = g.check(X), g.check(Z)
    if X & Z:
        return CradleViolation("overlap", members(X & Z))
    if popcount(X) <= 1:
        return None
    NX = neighbourhood_of_set(g, X)
    outside = g.full & ~(NX | X)
    NZX = NX & Z
    if not NZX:
        return None
    comps = components_within(g, outside)
    touch: dict[int, int] = {}
    for z in iter_members(NZX):
        t = 0
        for i, comp in enumerate(comps):
            if g.adj[z] & comp:
                t |= 1 << i
        if not t:
            return CradleViolation("no-outside-neighbour", z)
        touch[z] = t
    zs = members(NZX)
    for i, z in enumerate(zs):
        for z2 in zs[i + 1:]:
            if not (g.has_edge(z, z2) or touch[z] & touch[z2]):
                return CradleViolation("no-induced-path", (z, z2))
    return None


def is_cradle(g: Graph, X: VertexSet, Z: VertexSet) -> bool:
    return check_cradle(g, X, Z) is None


def cradle_pair_violations(g: Graph, cradle: Cradle) -> list[tuple]:
    """Counterexamples to the two matching properties every cradle has in a
    P5-free graph.

    ``("matching", x, x2, z, z2)``: the four vertices induce exactly the edges
    ``xz`` and ``x2z2``. ``("split", z, components)``: ``z`` has both a
    neighbour and a non-neighbour in more than one component of ``G[X]``.
    """
    X, Z = cradle
    adj, co = g.adj, g.co_adj
    out: list[tuple] = []
    for x in iter_members(X):
        for z in iter_members(Z & adj[x]):
            for x2 in iter_members(X & co[x] & co[z]):
                for z2 in iter_members(Z & adj[x2] & co[z] & co[x]):
                    if (x, z) < (x2, z2):
                        out.append(("matching", x, x2, z, z2))
    comps = components_within(g, X)
    for z in iter_members(Z):
        split = [D for D in comps if adj[z] & D and D & ~adj[z]]
        if len(split) > 1:
            out.append(("split", z, [members(D) for D in split]))
    return out


C = TypeVar("C")
D = TypeVar("D")


def minimal_covering_subset(
    candidates: Sequence[C], demanders: Sequence[D], satisfies: Callable[[D, C], bool]
) -> list[C]:
    """Inclusion-minimal sublist of ``candidates`` that still satisfies every demander.

    One pass in candidate order, dropping each candidate whose removal keeps
    every demander satisfied.
    """
    support = {i: [j for j, c in enumerate(candidates) if satisfies(d, c)] for i, d in enumerate(demanders)}
    for i, js in support.items():
        if not js:
            raise ValueError(f"demander {demanders[i]!r} is not satisfied by any candidate")
    alive = [True] * len(candidates)
    count = {i: len(js) for i, js in support.items()}
    serves: dict[int, list[int]] = {j: [] for j in range(len(candidates))}
    for i, js in support.items():
        for j in js:
            serves[j].append(i)
    for j in range(len(candidates)):
        if all(count[i] > 1 for i in serves[j]):
            alive[j] = False
            for i in serves[j]:
                count[i] -= 1
    return [c for j, c in enumerate(candidates) if alive[j]]


@dataclass(frozen=True)
class Rocker:
    I: tuple[VertexSet, ...]
    J: tuple[VertexSet, ...]

    def union(self) -> list[VertexSet]:
        """Distinct members of ``I`` and ``J``, ordered by least vertex."""
        return sorted(set(self.I) | set(self.J), key=lowest)


def build_rocker(g: Graph, cradle: Cradle, omega_bound: int | None = None, check_size: bool = True) -> Rocker:
    """Rocker for a cradle: ``I`` minimally represents the components some
    ``Z`` vertex misses entirely; ``J`` collects the components partially seen
    by a ``Z`` vertex that touches every component.

    When ``check_size`` is set, both families must have at most ``omega(g)``
    members (true for P5-free graphs); otherwise :class:`InvariantViolation`.
    """
    X, Z = cradle
    adj = g.adj
    comps = components_within(g, X)
    demanders = [z for z in iter_members(Z) if any(not adj[z] & D for D in comps)]
    I = minimal_covering_subset(comps, demanders, lambda z, D: not adj[z] & D)
    J = []
    seers = [z for z in iter_members(Z) if all(adj[z] & D for D in comps)]
    for D in comps:
        if any(D & ~adj[z] for z in seers):
            J.append(D)
    rocker = Rocker(tuple(I), tuple(J))
    if check_size:
        w = omega_size(g) if omega_bound is None else omega_bound
        if len(I) > w or len(J) > w:
            raise InvariantViolation(
                "rocker-size",
                f"|I|={len(I)}, |J|={len(J)} exceed omega={w}",
                {"I": [members(D) for D in I], "J": [members(D) for D in J], "omega": w},
            )
    return rocker


def enumerate_restricted_maximum_stable_sets(
    g: Graph, cradle: Cradle, cap: int = DEFAULT_ENUM_CAP
) -> StableSetFamily:
    X, Z = cradle
    if g.n == 0:
        return StableSetFamily(0, ())
    fam = enumerate_maximum_stable_sets(g, cap=cap)
    allowed = X | Z
    return StableSetFamily(fam.alpha, tuple(S for S in fam.members if not S & ~allowed and S & X))


class HittingProvider:
    """A budgeted source of hitting sets for induced subgraphs ``G[region]``.

    ``fn(g, region)`` must return a subset of ``region`` meeting every maximum
    stable set of ``G[region]``. Calls enforce the size budget, and with
    ``verify`` also re-check the hitting property.
    """

    def __init__(self, fn: Callable[[Graph, VertexSet], VertexSet], budget: int, name: str = "provider", verify: bool = False):
        self.fn = fn
        self.budget = budget
        self.name = name
        self.verify = verify
        self.calls = 0

    def __call__(self, g: Graph, region: VertexSet) -> VertexSet:
        if not region:
            raise EmptyGraphError(f"{self.name}: empty region")
        self.calls += 1
        W = self.fn(g, region)
        if W & ~region:
            raise InvariantViolation("provider-region", f"{self.name} returned vertices outside the region", members(W & ~region))
        if popcount(W) > self.budget:
            raise BudgetExceeded(f"{self.name} returned {popcount(W)} vertices, budget {self.budget}")
        if self.verify and not verify_hitting_set(g, W, within=region):
            raise InvariantViolation("provider-hits", f"{self.name} output does not hit G[region]", members(region))
        return W

    def __repr__(self):
        return f"HittingProvider({self.name}, budget={self.budget})"


def exact_provider(budget: int, verify: bool = False) -> HittingProvider:
    return HittingProvider(lambda g, r: eta_exact(g, r)[1], budget, "eta_exact", verify)


def restricted_hitting_set(
    g: Graph,
    cradle: Cradle,
    provider: HittingProvider,
    c: int,
    d: int,
    h: int,
    *,
    checks: bool = True,
    trace: Trace | None = None,
) -> VertexSet:
    """A set meeting every ``(X, Z)``-restricted maximum stable set of ``g``,
    of size at most ``gamma_bound(c, d, h)``.

    Preconditions: ``g`` is P5-free with ``omega(g) <= c``; ``cradle`` is a
    cradle; ``omega(G[X]) <= d``; ``provider`` meets budget ``h`` on every
    subset of ``X``. With ``checks`` the preconditions and the intermediate
    structural claims are verified at runtime.
    """
    X, Z = cradle
    if c < 1 or d < 1 or h < 1:
        raise ValueError("c, d, h must be >= 1")
    if checks:
        bad = check_cradle(g, X, Z)
        if bad is not None:
            raise ValueError(f"not a cradle: {bad.kind} at {bad.witness}")
        if omega_size(g) > c:
            raise ValueError(f"omega(g) exceeds c={c}")
        if omega_size(g, X) > d:
            raise ValueError(f"omega(G[X]) exceeds d={d}")
    W = _restricted(g, X, Z, provider, c, d, h, checks, trace)
    if checks and popcount(W) > gamma_bound(c, d, h):
        raise InvariantViolation("gamma", f"|W|={popcount(W)} exceeds gamma({c},{d},{h})", members(W))
    return W


def _restricted(g, X, Z, provider, c, d, h, checks, trace) -> VertexSet:
    adj, co = g.adj, g.co_adj
    if not X:
        return 0
    if popcount(X) == 1:
        return X
    if all(not X & co[z] for z in iter_members(Z)):
        # every restricted set lies inside X
        if trace:
            trace.bump("case-complete")
        if g.is_stable(X):
            return X & -X
        return provider(g, X)
    rocker = build_rocker(g, Cradle(X, Z), omega_bound=c, check_size=checks)
    parts = rocker.union()
    if d == 1:
        if trace:
            trace.bump("case-stable")
        W = 0
        for Q in parts:
            W |= Q
        return W
    if trace:
        trace.bump("case-recurse")
    y_limit = (c + 1) ** (c + 1)
    W = 0
    for Q in parts:
        W |= provider(g, Q)
        NZQ = neighbourhood_of_set(g, Q) & Z
        demanders = [q for q in iter_members(Q) if NZQ & co[q]]
        Y = minimal_covering_subset(members(NZQ), demanders, lambda q, y: not adj[q] >> y & 1)
        if trace:
            trace.counts["Y-max"] = max(trace.counts["Y-max"], len(Y))
        if checks and len(Y) >= y_limit:
            raise InvariantViolation("Y-size", f"|Y|={len(Y)} >= (c+1)^(c+1)={y_limit}", Y)
        for y in Y:
            Xy = Q & co[y]
            Zy = (X & ~Xy) | Z
            if checks:
                bad = check_cradle(g, Xy, Zy)
                if bad is not None:
                    raise InvariantViolation("derived-cradle", f"derived pair for y={y} is not a cradle: {bad.kind}", (members(Xy), members(Zy), bad))
                if omega_size(g, Xy) > d - 1:
                    raise InvariantViolation("derived-omega", f"omega(X_y) exceeds d-1={d - 1} for y={y}", members(Xy))
            if trace:
                trace.bump("derived")
                if trace.keep_cradles:
                    trace.derived_cradles.append((g, Cradle(Xy, Zy)))
            W |= _restricted(g, Xy, Zy, provider, c, d - 1, h, checks, trace)
    return W


def packing_hitting_set(
    g: Graph,
    packing: Sequence[Cradle],
    provider: HittingProvider,
    c: int,
    h: int,
    *,
    checks: bool = True,
    trace: Trace | None = None,
) -> VertexSet:
    """Union of restricted hitting sets over a cradle packing; at most
    ``len(packing) * gamma_bound(c, c, h)`` vertices."""
    W = 0
    for X, Z in packing:
        if not X:
            continue
        d = max(1, omega_size(g, X))
        W |= restricted_hitting_set(g, Cradle(X, Z), provider, c, d, h, checks=checks, trace=trace)
    return W


def p5_packing(g: Graph, K: VertexSet) -> tuple[list[Cradle], list[Cradle]]:
    """Singleton cradles on the clique ``K`` and the cradles ``(X_i, Z_i)``.

    ``X_0`` holds the vertices anticomplete to ``K``; ``X_i`` (``i >= 1``) the
    vertices whose highest-indexed neighbour in ``K`` is ``v_i``; ``Z_i`` the
    union of the later ``X_j``.
    """
    vs = members(K)
    k = len(vs)
    parts = [0] * (k + 1)
    for u in iter_members(g.full & ~K):
        nb = g.adj[u] & K
        if not nb:
            parts[0] |= 1 << u
        else:
            parts[vs.index(nb.bit_length() - 1) + 1] |= 1 << u
    zetas = [Cradle(1 << v, g.full & ~(1 << v)) for v in vs]
    xis = []
    for i in range(k + 1):
        Zi = 0
        for j in range(i + 1, k + 1):
            Zi |= parts[j]
        xis.append(Cradle(parts[i], Zi))
    return zetas, xis


class _P5Solver:
    def __init__(self, checks: bool, trace: Trace | None, verify_providers: bool):
        self.checks = checks
        self.trace = trace
        self.verify_providers = verify_providers
        self.memo: dict[Hashable, VertexSet] = {}

    def on_region(self, g: Graph, region: VertexSet) -> VertexSet:
        sub, labels = g.induced(region)
        return lift(self.solve(sub), labels)

    def solve(self, g: Graph) -> VertexSet:
        key = (g.n, g.adj)
        if key in self.memo:
            return self.memo[key]
        W = self._solve(g)
        self.memo[key] = W
        return W

    def _solve(self, g: Graph) -> VertexSet:
        R = component_of(g, 0)
        if R != g.full:
            if self.trace:
                self.trace.bump("component-reduction")
            return self.on_region(g, R)
        k, K = omega(g)
        if k <= 1:
            return 1
        zetas, xis = p5_packing(g, K)
        h = psi_p5_bound(k - 1)
        provider = HittingProvider(self.on_region, h, f"p5(omega<{k})", self.verify_providers)
        W = K  # each singleton cradle ({v}, V - v) is hit by v itself
        for i, (Xi, Zi) in enumerate(xis):
            if not Xi:
                continue
            if self.checks:
                bad = check_cradle(g, Xi, Zi)
                if bad is not None:
                    raise InvariantViolation("packing-cradle", f"xi_{i} is not a cradle: {bad.kind}", (i, bad))
                for D in components_within(g, Xi):
                    if omega_size(g, D) > k - 1:
                        raise InvariantViolation("packing-omega", f"a component of X_{i} has clique number {k}", members(D))
            if self.trace:
                self.trace.bump("packing-cradle")
                if self.trace.keep_cradles:
                    self.trace.packing_cradles.append((g, Cradle(Xi, Zi)))
            d = max(1, omega_size(g, Xi))
            W |= _restricted(g, Xi, Zi, provider, k, d, h, self.checks, self.trace)
        if self.checks and popcount(W) > psi_p5_bound(k):
            raise InvariantViolation("psi", f"|W|={popcount(W)} exceeds psi({k})", members(W))
        return W


def p5_hitting_set(
    g: Graph,
    *,
    strict: bool | None = None,
    checks: bool = True,
    trace: Trace | None = None,
    verify_providers: bool = False,
) -> HittingCertificate:
    """Hitting set for a P5-free graph of size at most ``psi_p5_bound(omega)``.

    ``strict`` (default: on for ``n <= 60``) rejects P5-containing input up
    front with the induced path as witness; otherwise non-P5-free input is
    caught, if at all, by the runtime structural checks.
    """
    if g.n == 0:
        raise EmptyGraphError("the null graph has no hitting set")
    if strict is None:
        strict = g.n <= STRICT_P5_MAX_N
    if strict:
        emb = find_induced_p5(g)
        if emb is not None:
            raise NotInClassError(f"graph contains an induced P5 on {list(emb)}", list(emb), "P5")
    k = omega_size(g)
    W = _P5Solver(checks, trace, verify_providers).solve(g)
    return certify(g, W, "p5", {"omega": k}, psi_p5_bound(k))
