"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (subset enumeration, networkx) so it
shares no code paths with the package.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from etahit.graph import Graph


# filled by the acceptance tests, printed in the terminal summary
CRITERION_LINES: list[str] = []


def rand_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def subsets(vertices, k=None):
    vertices = list(vertices)
    sizes = range(len(vertices) + 1) if k is None else [k]
    for r in sizes:
        yield from itertools.combinations(vertices, r)


def is_stable(g: Graph, S) -> bool:
    return all(not g.has_edge(u, v) for u, v in itertools.combinations(S, 2))


def is_clique(g: Graph, S) -> bool:
    return all(g.has_edge(u, v) for u, v in itertools.combinations(S, 2))


def brute_max_stable_sets(g: Graph, within=None) -> list[frozenset]:
    verts = range(g.n) if within is None else sorted(within)
    best, out = -1, []
    for S in subsets(verts):
        if is_stable(g, S):
            if len(S) > best:
                best, out = len(S), [frozenset(S)]
            elif len(S) == best:
                out.append(frozenset(S))
    return out


def brute_alpha(g: Graph, within=None) -> int:
    return len(brute_max_stable_sets(g, within)[0])


def brute_omega(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(to_nx(g)))


def brute_is_hitting(g: Graph, W) -> bool:
    W = set(W)
    a = brute_alpha(g)
    rest = [v for v in range(g.n) if v not in W]
    return brute_alpha(g, rest) < a if rest else a > 0


def brute_eta(g: Graph) -> int:
    fam = brute_max_stable_sets(g)
    for k in range(g.n + 1):
        for W in itertools.combinations(range(g.n), k):
            if all(S & set(W) for S in fam):
                return k
    raise AssertionError("unreachable")


def brute_chi(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colouring in itertools.product(range(k), repeat=g.n):
            if all(colouring[u] != colouring[v] for u, v in g.edges()):
                return k
    raise AssertionError("unreachable")


def brute_contains_induced(g: Graph, h: Graph) -> bool:
    H = to_nx(h)
    G = to_nx(g)
    for S in itertools.combinations(range(g.n), h.n):
        if nx.is_isomorphic(G.subgraph(S), H):
            return True
    return False


def brute_lovasz_perfect(g: Graph) -> bool:
    for S in subsets(range(g.n)):
        if not S:
            continue
        sub = g.induced(sum(1 << v for v in S))[0]
        if brute_alpha(sub) * brute_omega(sub) < len(S):
            return False
    return True


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs_with_subset(draw, min_n: int = 1, max_n: int = 9):
    g = draw(graphs(min_n, max_n))
    mask = draw(st.integers(0, (1 << g.n) - 1))
    return g, mask


def p5_free_graph(rng: random.Random, max_n: int = 12) -> Graph:
    """A seeded P5-free graph from one of three structured or sampled sources."""
    from etahit.generators import cograph, random_h_free, split_graph

    kind = rng.randrange(3)
    seed = rng.getrandbits(64)
    if kind == 0:
        k = rng.randint(1, max_n // 2)
        return split_graph(k, rng.randint(0, max_n - k), rng.choice(["1/3", "1/2", "2/3"]), seed)
    if kind == 1:
        return cograph(rng.randint(1, max_n), seed)
    # rejection starves at middling density, so stay sparse or dense
    return random_h_free(rng.randint(3, min(max_n, 9)), rng.choice(["1/5", "3/4", "4/5"]), seed, "P5", max_tries=10_000)


def sample_cradles(count: int, seed: int, max_n: int = 12):
    """Seeded valid cradles ``(g, X, Z)`` in P5-free graphs with ``|X| >= 2``
    and some ``Z`` vertex incomplete to ``X``.

    Every sampled cradle has at least one restricted maximum stable set, so
    properties quantified over those sets are never vacuous.
    Half are random disjoint pairs that pass the cradle test, half are the
    pairs the P5 construction itself builds (packing and derived cradles).
    """
    from etahit.cradle import Cradle, Trace, enumerate_restricted_maximum_stable_sets, is_cradle, p5_hitting_set
    from etahit.graph import popcount

    rng = random.Random(seed)
    out = []

    def interesting(g, X, Z):
        if popcount(X) < 2 or not any(X & g.co_adj[z] for z in range(g.n) if Z >> z & 1):
            return False
        return bool(enumerate_restricted_maximum_stable_sets(g, Cradle(X, Z)).members)

    while len(out) < count:
        g = p5_free_graph(rng, max_n)
        if rng.random() < 0.5:
            for _ in range(20):
                X = Z = 0
                for v in range(g.n):
                    r = rng.random()
                    if r < 0.4:
                        X |= 1 << v
                    elif r < 0.8:
                        Z |= 1 << v
                if interesting(g, X, Z) and is_cradle(g, X, Z):
                    out.append((g, Cradle(X, Z)))
                    break
        else:
            trace = Trace(keep_cradles=True)
            p5_hitting_set(g, trace=trace)
            found = [(h, c) for h, c in trace.packing_cradles + trace.derived_cradles if interesting(h, *c)]
            if found:
                out.append(found[rng.randrange(len(found))])
    return out[:count]
