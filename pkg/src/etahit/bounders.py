"""Hitting-set constructions for specific hereditary classes, and the
reduction lemmas they are assembled from."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import patterns
from .bounds import lt_bound, proper_p5_bound, psi_ft_bound, psi_sst_bound, star_bound
from .cradle import HittingProvider, minimal_covering_subset
from .errors import (
    ColouringBudgetError,
    ColouringLimitError,
    EmptyGraphError,
    InvariantViolation,
    NotInClassError,
)
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    component_of,
    components_within,
    iter_members,
    lift,
    lowest,
    members,
    popcount,
)
from .oracle import (
    HittingCertificate,
    alpha_size,
    certify,
    exact_colouring,
    is_perfect_lovasz,
    lovasz_violation,
    omega_size,
)
from .patterns import Pattern, find_induced_pattern
from .ramsey import Kind, ramsey_extract

STRICT_MAX_N = 60
COLOUR_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class ClassSpec:
    """A hereditary class with its parameters.

    ``kind`` is one of ``star``, ``sst``, ``ft``, ``lt``, ``perfect``, ``p5``,
    ``proper-p5``. ``pattern`` is only used by ``proper-p5``.
    """

    kind: str
    s: int | None = None
    t: int | None = None
    pattern: Pattern | None = None

    def __post_init__(self):
        k = self.kind
        if k == "star" and (self.s is None or self.s < 1):
            raise ValueError("star class needs s >= 1")
        if k == "sst" and (self.s is None or self.s < 1 or self.t is None or self.t < 0):
            raise ValueError("S_(s,t) class needs s >= 1 and t >= 0")
        if k in ("ft", "lt") and (self.t is None or self.t < 1):
            raise ValueError(f"{k} class needs t >= 1")
        if k == "proper-p5" and self.pattern is None:
            raise ValueError("proper-p5 class needs a pattern")
        if k not in ("star", "sst", "ft", "lt", "perfect", "p5", "proper-p5"):
            raise ValueError(f"unknown class kind {k!r}")

    @classmethod
    def parse(cls, text: str) -> ClassSpec:
        """``p5``, ``perfect``, ``star:s``, ``sst:s,t``, ``ft:t``, ``lt:t``, ``proper-p5:H``."""
        text = text.strip()
        kind, _, arg = text.partition(":")
        kind = kind.lower()
        try:
            if kind in ("p5", "perfect"):
                if arg:
                    raise ValueError
                return cls(kind)
            if kind == "star":
                return cls(kind, s=int(arg))
            if kind == "sst":
                s, t = arg.split(",")
                return cls(kind, s=int(s), t=int(t))
            if kind in ("ft", "lt"):
                return cls(kind, t=int(arg))
            if kind == "proper-p5":
                return cls(kind, pattern=patterns.parse_pattern(arg))
        except ValueError:
            pass
        raise ValueError(f"bad class spec {text!r}")

    def label(self) -> str:
        if self.kind == "star":
            return f"star:{self.s}"
        if self.kind == "sst":
            return f"sst:{self.s},{self.t}"
        if self.kind in ("ft", "lt"):
            return f"{self.kind}:{self.t}"
        if self.kind == "proper-p5":
            try:
                patterns.parse_pattern(self.pattern.name)
                return f"proper-p5:{self.pattern.name}"
            except ValueError:
                from .graph6 import encode

                return f"proper-p5:g6:{encode(self.pattern.graph)}"
        return self.kind

    def forbidden(self) -> Pattern | None:
        if self.kind == "star":
            return patterns.star(self.s)
        if self.kind == "sst":
            return patterns.sst(self.s, self.t)
        if self.kind == "ft":
            return patterns.ft(self.t)
        if self.kind == "lt":
            return patterns.lt(self.t)
        if self.kind == "p5":
            return patterns.path(5)
        if self.kind == "proper-p5":
            return self.pattern
        return None


def _require(g: Graph) -> None:
    if g.n == 0:
        raise EmptyGraphError("the null graph has no hitting set")


def require_free(g: Graph, p: Pattern) -> None:
    emb = find_induced_pattern(g, p)
    if emb is not None:
        raise NotInClassError(f"graph contains an induced {p.name} on {list(emb)}", list(emb), p.name)


def _strict(strict: bool | None, g: Graph) -> bool:
    return g.n <= STRICT_MAX_N if strict is None else strict


def _on_region(solve: Callable[[Graph], VertexSet]) -> Callable[[Graph, VertexSet], VertexSet]:
    def fn(g: Graph, region: VertexSet) -> VertexSet:
        sub, labels = g.induced(region)
        return lift(solve(sub), labels)

    return fn


# -- generic lemmas ----------------------------------------------------------


def closed_neighbourhood_hitting(g: Graph, v: int) -> VertexSet:
    """``N[v]``: every maximum stable set contains ``v`` or one of its neighbours."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return g.adj[v] | (1 << v)


def iterated_alpha_reduction(g: Graph, region: VertexSet, d: int, provider: HittingProvider) -> VertexSet:
    """Peel ``d`` hitting sets off ``G[region]`` in turn.

    The result ``D`` has at most ``d * provider.budget`` vertices and
    ``alpha(G[region - D]) <= alpha(G[region]) - d`` (or the region is used up).
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    region = g.check(region)
    D = 0
    current = region
    for _ in range(d):
        if not current:
            break
        W = provider(g, current)
        D |= W
        current &= ~W
    return D


@dataclass(frozen=True)
class Part:
    A: VertexSet
    A2: VertexSet
    d: int
    provider: HittingProvider


def hit_many_times(g: Graph, parts: Sequence[Part | tuple]) -> VertexSet:
    """Union of :func:`iterated_alpha_reduction` over the parts.

    Each part ``(A, A2, d, provider)`` needs ``A | A2 == V(g)``. The result is a
    hitting set provided every maximum stable set ``S`` has ``|S & A2| < d`` for
    some part; callers own that guarantee.

    Each ``d`` is capped at ``alpha(g)``: a part with ``d > alpha(g)`` cannot
    lower ``alpha`` by ``d``, so the guarantee must hold for the capped values.
    Both class callers satisfy it once ``alpha(g) >= 2``.
    """
    parts = [p if isinstance(p, Part) else Part(*p) for p in parts]
    a = alpha_size(g)
    D = 0
    for part in parts:
        if part.A | part.A2 != g.full:
            raise ValueError(f"part does not cover V(g): missing {members(g.full & ~(part.A | part.A2))}")
        D |= iterated_alpha_reduction(g, part.A, min(part.d, a), part.provider)
    return D


def cutset_reduce(
    g: Graph,
    C: VertexSet,
    inner: Callable[[Graph, VertexSet], VertexSet],
    component: VertexSet | None = None,
) -> VertexSet:
    """``C`` together with a hitting set of one component of ``g - C``.

    ``component`` names that component explicitly (it must be one); by default
    the component holding the lowest vertex outside ``C`` is used.
    """
    C = g.check(C)
    rest = g.full & ~C
    if component is None:
        if not rest:
            raise ValueError("no component left after removing the cutset")
        component = component_of(g, lowest(rest), rest)
    else:
        if not component:
            raise ValueError("designated component is empty")
        if component & C or component_of(g, lowest(component), rest) != component:
            raise InvariantViolation("cutset-component", "designated set is not a component of g - C", members(component))
    return C | inner(g, component)


# -- stars -------------------------------------------------------------------


def _star_witness(g: Graph, v: int, w: int, s: int) -> list[int]:
    """Induced K_{1,s} at ``v`` from a neighbourhood of at least ``w**s`` vertices."""
    out = ramsey_extract(g, w, s, within=g.adj[v])
    if out.kind is not Kind.STABLE:  # pragma: no cover - would give a clique of size w + 1
        raise InvariantViolation("star-ramsey", "neighbourhood holds an omega-clique", out.vertices)
    return [v] + out.vertices


def _star_set(g: Graph, s: int) -> VertexSet:
    w = omega_size(g)
    limit = star_bound(w, s)
    degs = [g.degree(v) for v in range(g.n)]
    top = max(range(g.n), key=lambda v: (degs[v], -v))
    if degs[top] >= limit:
        witness = _star_witness(g, top, w, s)
        raise NotInClassError(f"vertex {top} has degree {degs[top]} >= omega^s = {limit}", witness, f"K1,{s}")
    v = min(range(g.n), key=lambda u: (degs[u], u))
    return closed_neighbourhood_hitting(g, v)


def star_free_hitting(g: Graph, s: int, *, strict: bool | None = None) -> HittingCertificate:
    """``N[v]`` for a minimum-degree ``v``; in a K_{1,s}-free graph every degree
    is below ``omega^s``."""
    _require(g)
    if s < 1:
        raise ValueError("s must be >= 1")
    if _strict(strict, g):
        require_free(g, patterns.star(s))
    W = _star_set(g, s)
    w = omega_size(g)
    return certify(g, W, "star", {"s": s, "omega": w}, star_bound(w, s))


# -- S_(s,t) -----------------------------------------------------------------


def _sst_set(g: Graph, s: int, t: int) -> VertexSet:
    if g.n == 0:
        return 0
    if t == 0:
        return _star_set(g, s)
    c = omega_size(g)
    if c <= 1:
        return 1
    if alpha_size(g) == 1:
        return g.full
    x = 0
    Nx = g.adj[x]
    closed = Nx | 1
    first = HittingProvider(_on_region(lambda h: _sst_set(h, s, t)), psi_sst_bound(c - 1, s, t), f"sst({s},{t})<{c}")
    second = HittingProvider(_on_region(lambda h: _sst_set(h, s, t - 1)), psi_sst_bound(c, s, t - 1), f"sst({s},{t - 1})")
    W = hit_many_times(
        g,
        [
            Part(Nx, g.full & ~Nx, t, first),
            Part(g.full & ~closed, closed, s + 1, second),
        ],
    )
    if popcount(W) > psi_sst_bound(c, s, t):
        raise InvariantViolation("psi-sst", f"|W|={popcount(W)} exceeds psi({c},{s},{t})", members(W))
    return W


def sst_hitting_set(g: Graph, s: int, t: int, *, strict: bool | None = None) -> HittingCertificate:
    _require(g)
    if s < 1 or t < 0:
        raise ValueError("need s >= 1 and t >= 0")
    if _strict(strict, g):
        require_free(g, patterns.sst(s, t))
    W = _sst_set(g, s, t)
    w = omega_size(g)
    return certify(g, W, "sst", {"s": s, "t": t, "omega": w}, psi_sst_bound(w, s, t))


# -- F_t ---------------------------------------------------------------------


@dataclass(frozen=True)
class FtSplit:
    """The vertex sets chosen at one level of the F_t construction."""

    x1: int
    x2: int
    N: VertexSet
    M: VertexSet
    P: VertexSet
    Q: VertexSet
    NQP: VertexSet
    NQN: VertexSet
    component: VertexSet

    @property
    def C(self) -> VertexSet:
        return self.NQP | self.NQN


def ft_split(g: Graph) -> FtSplit | None:
    """``None`` when ``g`` has no edge."""
    adj = g.adj
    x1 = next((v for v in range(g.n) if adj[v]), None)
    if x1 is None:
        return None
    N = adj[x1]
    M = g.full & ~(N | (1 << x1))
    x2 = max(iter_members(N), key=lambda v: (popcount(adj[v] & M), -v))
    P = adj[x2] & M
    Q = M & ~P
    NQP = 0
    for p in iter_members(P):
        NQP |= adj[p]
    NQN = 0
    for y in iter_members(N):
        NQN |= adj[y]
    return FtSplit(x1, x2, N, M, P, Q, NQP & Q, NQN & Q, adj[x1] | adj[x2])


def _ft_set(g: Graph, t: int) -> VertexSet:
    if g.n == 0:
        return 0
    c = omega_size(g)
    split = ft_split(g) if c > 1 else None
    if split is None:
        return 1
    adj = g.adj
    NQP, NQN = split.NQP, split.NQN
    limit = (c + 1) ** (2 * t + 1)
    if popcount(NQP) >= limit:
        raise InvariantViolation("ft-NQP", f"|N_Q(P)|={popcount(NQP)} >= {limit}", members(NQP))
    if popcount(NQN) >= 2 * limit:
        raise InvariantViolation("ft-NQN", f"|N_Q(N)|={popcount(NQN)} >= {2 * limit}", members(NQN))

    def inner(gg: Graph, comp: VertexSet) -> VertexSet:
        sub, labels = gg.induced(comp)
        index = {v: i for i, v in enumerate(labels)}

        def local(mask: VertexSet) -> VertexSet:
            return sum(1 << index[v] for v in iter_members(mask))

        A1 = adj[split.x1]
        A2 = adj[split.x2]
        budget = psi_ft_bound(c - 1, t)
        prov = HittingProvider(_on_region(lambda h: _ft_set(h, t)), budget, f"ft({t})<{c}")
        D = hit_many_times(
            sub,
            [
                Part(local(A1), local(A2 & ~A1), t, prov),
                Part(local(A2), local(A1 & ~A2), t, prov),
            ],
        )
        return lift(D, labels)

    W = cutset_reduce(g, split.C, inner, component=split.component)
    if popcount(W) > psi_ft_bound(c, t):
        raise InvariantViolation("psi-ft", f"|W|={popcount(W)} exceeds psi({c},{t})", members(W))
    return W


def ft_hitting_set(g: Graph, t: int, *, strict: bool | None = None) -> HittingCertificate:
    _require(g)
    if t < 1:
        raise ValueError("t must be >= 1")
    if _strict(strict, g):
        require_free(g, patterns.ft(t))
    W = _ft_set(g, t)
    w = omega_size(g)
    return certify(g, W, "ft", {"t": t, "omega": w}, psi_ft_bound(w, t))


# -- L_t ---------------------------------------------------------------------


@dataclass(frozen=True)
class LtClassPlan:
    """What the L_t construction did with one colour class."""

    cls: VertexSet
    large: bool
    Z: VertexSet
    W: VertexSet


def lt_plan(g: Graph, t: int, classes: Sequence[VertexSet]) -> list[LtClassPlan]:
    k = len(classes)
    threshold = 4 * k * k * t
    out = []
    for Ci in classes:
        size = popcount(Ci)
        if size < threshold:
            out.append(LtClassPlan(Ci, False, 0, Ci))
            continue
        Zi = 0
        for z in iter_members(g.full & ~Ci):
            if k * popcount(Ci & g.co_adj[z]) >= size:
                Zi |= 1 << z
        Di = minimal_covering_subset(members(Ci), members(Zi), lambda z, u: not g.adj[z] >> u & 1)
        if not Di:
            Di = [lowest(Ci)]
        if len(Di) >= 2 * k * k:
            raise InvariantViolation("lt-D", f"|D_i|={len(Di)} >= 2k^2={2 * k * k}", Di)
        out.append(LtClassPlan(Ci, True, Zi, sum(1 << u for u in Di)))
    return out


def lt_colouring(g: Graph, t: int, node_budget: int | None = COLOUR_NODE_BUDGET) -> tuple[list[VertexSet], bool]:
    """Colouring with at most ``omega^(2t+2)`` classes and whether it is optimal."""
    w = omega_size(g)
    limit = w ** (2 * t + 2)
    try:
        return exact_colouring(g, limit=limit, node_budget=node_budget), True
    except ColouringBudgetError as exc:
        if len(exc.classes) > limit:
            raise ColouringLimitError(f"heuristic colouring uses {len(exc.classes)} > {limit} colours", w) from exc
        return exc.classes, False


def lt_hitting_set(g: Graph, t: int, *, strict: bool | None = None, node_budget: int | None = COLOUR_NODE_BUDGET) -> HittingCertificate:
    _require(g)
    if t < 1:
        raise ValueError("t must be >= 1")
    if _strict(strict, g):
        require_free(g, patterns.lt(t))
    w = omega_size(g)
    if w <= 1:
        return certify(g, 1, "lt", {"t": t, "omega": w, "k": 1}, lt_bound(w, t))
    try:
        classes, optimal = lt_colouring(g, t, node_budget)
    except ColouringLimitError as exc:
        raise NotInClassError(f"chromatic number exceeds omega^(2t+2); graph is not M_{t + 2}-free", exc.lower_bound, f"M{t + 2}") from exc
    plan = lt_plan(g, t, classes)
    W = 0
    for item in plan:
        W |= item.W
    cert = certify(g, W, "lt", {"t": t, "omega": w, "k": len(classes)}, lt_bound(w, t))
    cert.extra["colouring_optimal"] = optimal
    cert.extra["large_classes"] = sum(item.large for item in plan)
    return cert


# -- perfect graphs and the proper-P5 dispatcher -------------------------------


def clique_cover(g: Graph) -> list[VertexSet]:
    """Minimum partition of ``V(g)`` into cliques (colouring of the complement)."""
    return exact_colouring(g.complement())


def perfect_hitting_set(g: Graph, *, strict: bool | None = None) -> HittingCertificate:
    """Smallest clique of a clique cover with exactly ``alpha`` cliques."""
    _require(g)
    if strict is None:
        strict = g.n <= 12
    if strict:
        bad = lovasz_violation(g)
        if bad is not None:
            raise NotInClassError("graph is not perfect", members(bad), "imperfect")
    cover = clique_cover(g)
    a = alpha_size(g)
    if len(cover) != a:
        raise NotInClassError(f"clique cover needs {len(cover)} cliques but alpha = {a}", [members(c) for c in cover], "imperfect")
    W = min(cover, key=lambda c: (popcount(c), lowest(c)))
    w = omega_size(g)
    return certify(g, W, "perfect", {"omega": w}, w)


_P5 = patterns.path(5)


def proper_p5_route(h: Pattern | Graph) -> str:
    """Which construction serves ``h``-free graphs: ``perfect``, ``sst`` or ``lt``."""
    hg = h.graph if isinstance(h, Pattern) else h
    if hg.n >= 5 or find_induced_pattern(_P5.graph, hg) is None:
        raise ValueError(f"{getattr(h, 'name', 'pattern')} is not a proper induced subgraph of P5")
    if find_induced_pattern(patterns.path(4).graph, hg) is not None:
        return "perfect"
    if find_induced_pattern(patterns.sst(2, 1).graph, hg) is not None:
        return "sst"
    if find_induced_pattern(patterns.lt(1).graph, hg) is not None:
        return "lt"
    raise AssertionError("every proper induced subgraph of P5 lies in P4, S(2,1) or L1")  # pragma: no cover


def proper_p5_dispatch(g: Graph, h: Pattern | Graph, *, strict: bool | None = None) -> HittingCertificate:
    _require(g)
    route = proper_p5_route(h)
    pat = h if isinstance(h, Pattern) else patterns.explicit(h)
    if _strict(strict, g):
        require_free(g, pat)
    if route == "perfect":
        cert = perfect_hitting_set(g, strict=False)
    elif route == "sst":
        cert = sst_hitting_set(g, 2, 1, strict=False)
    else:
        cert = lt_hitting_set(g, 1, strict=False)
    w = omega_size(g)
    cert.params = {"pattern": pat.name, "route": route, **cert.params}
    cert.algorithm = f"proper-p5/{route}"
    cert.claimed_bound = proper_p5_bound(w)
    return cert


def run_class(g: Graph, spec: ClassSpec, *, strict: bool | None = None) -> HittingCertificate:
    """Dispatch a class spec to its construction."""
    from .cradle import p5_hitting_set

    if spec.kind == "p5":
        return p5_hitting_set(g, strict=strict)
    if spec.kind == "star":
        return star_free_hitting(g, spec.s, strict=strict)
    if spec.kind == "sst":
        return sst_hitting_set(g, spec.s, spec.t, strict=strict)
    if spec.kind == "ft":
        return ft_hitting_set(g, spec.t, strict=strict)
    if spec.kind == "lt":
        return lt_hitting_set(g, spec.t, strict=strict)
    if spec.kind == "perfect":
        return perfect_hitting_set(g, strict=strict)
    return proper_p5_dispatch(g, spec.pattern, strict=strict)
