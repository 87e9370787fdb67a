"""End-to-end acceptance checks, one test per criterion.

Each test records a single ``PASS``/``FAIL`` line, repeated in the pytest
terminal summary, and then asserts, so the verdict and the line agree.
"""

import random
import time
from functools import lru_cache

import pytest

from etahit import graph6, patterns
from etahit.bounders import (
    Part,
    cutset_reduce,
    ft_hitting_set,
    hit_many_times,
    iterated_alpha_reduction,
    lt_hitting_set,
    perfect_hitting_set,
    sst_hitting_set,
    star_free_hitting,
)
from etahit.bounds import lt_bound, psi_p5_bound, psi_sst_bound, psi_ft_bound
from etahit.cradle import build_rocker, enumerate_restricted_maximum_stable_sets, exact_provider, p5_hitting_set
from etahit.errors import InvariantViolation
from etahit.generators import canonical_graph6, derive_seed, enumerate_small_graphs, gnp, random_h_free, split_graph
from etahit.graph import Graph, lift, members, popcount
from etahit.oracle import alpha_size, eta_exact, is_perfect_lovasz, omega_size, verify_hitting_set
from etahit.patterns import is_free
from etahit.ramsey import Kind, ramsey_extract
from helpers import CRITERION_LINES, is_clique, is_stable, sample_cradles

SEED = 20240601


def report(number, ok, detail, started):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail} ({time.perf_counter() - started:.1f}s)"
    print(line)
    CRITERION_LINES.append(line)
    assert ok, line


def small_graphs(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_small_graphs(n)


def test_criterion_01_exact_oracle_golden_values():
    t0 = time.perf_counter()
    got = {f"K{t}": eta_exact(Graph.complete(t))[0] for t in range(1, 8)}
    got["C5"] = eta_exact(Graph.cycle(5))[0]
    got["P4"] = eta_exact(Graph.path(4))[0]
    want = {**{f"K{t}": t for t in range(1, 8)}, "C5": 3, "P4": 2}
    elapsed = time.perf_counter() - t0
    report(1, got == want and elapsed < 1.0, f"eta values {got}", t0)


def test_criterion_02_perfect_route_exhaustive():
    t0 = time.perf_counter()
    bad, count = [], 0
    for g in small_graphs(7):
        if not is_perfect_lovasz(g):
            continue
        count += 1
        cert = perfect_hitting_set(g)
        if not (verify_hitting_set(g, cert.W) and cert.size <= omega_size(g)):
            bad.append(graph6.encode(g))
    report(2, not bad and count > 0, f"{count} perfect graphs n<=7, {len(bad)} failures {bad[:5]}", t0)


@lru_cache(maxsize=None)
def _hereditarily_eta_le_omega(code):
    g = graph6.decode(code)
    if g.n == 0:
        return True
    if eta_exact(g)[0] > omega_size(g):
        return False
    return all(_hereditarily_eta_le_omega(canonical_graph6(g.induced(g.full & ~(1 << v))[0])) for v in range(g.n))


def test_criterion_03_lovasz_equivalence():
    t0 = time.perf_counter()
    mismatches, count, perfect = [], 0, 0
    for g in small_graphs(7):
        count += 1
        lov = is_perfect_lovasz(g)
        perfect += lov
        if lov != _hereditarily_eta_le_omega(graph6.encode(g)):
            mismatches.append(graph6.encode(g))
    report(3, not mismatches, f"{count} graphs n<=7 ({perfect} perfect), {len(mismatches)} mismatches {mismatches[:5]}", t0)


def _p5_corpus():
    rng = random.Random(SEED + 4)
    out = []
    while len(out) < 200:
        seed = rng.getrandbits(64)
        if len(out) % 2 == 0:
            k = rng.randint(1, 12)
            out.append(split_graph(k, rng.randint(0, 25 - k), rng.choice(["1/3", "1/2", "2/3"]), seed))
        else:
            out.append(random_h_free(rng.randint(5, 10), rng.choice(["1/5", "4/5"]), seed, "P5", max_tries=10_000))
    return out


def test_criterion_04_p5_route():
    t0 = time.perf_counter()
    failures, invariant_hits, count = [], [], 0
    graphs = [g for g in small_graphs(7) if is_free(g, patterns.path(5))] + _p5_corpus()
    for g in graphs:
        count += 1
        try:
            cert = p5_hitting_set(g)
        except InvariantViolation as exc:
            invariant_hits.append((graph6.encode(g), exc.label))
            continue
        ok = verify_hitting_set(g, cert.W) and cert.size <= psi_p5_bound(omega_size(g)) and cert.size <= g.n
        if not ok:
            failures.append(graph6.encode(g))
    report(4, not failures and not invariant_hits, f"{count} P5-free graphs, {len(failures)} failures, {len(invariant_hits)} invariant violations {invariant_hits[:3]}", t0)


@pytest.fixture(scope="module")
def cradle_corpus():
    return sample_cradles(500, SEED + 5)


def test_criterion_05_restricted_sets_meet_rocker(cradle_corpus):
    t0 = time.perf_counter()
    violations, checked = 0, 0
    for g, cradle in cradle_corpus:
        parts = build_rocker(g, cradle, check_size=False).union()
        for S in enumerate_restricted_maximum_stable_sets(g, cradle).members:
            checked += 1
            if not any(S & Q for Q in parts):
                violations += 1
    report(5, violations == 0 and len(cradle_corpus) == 500, f"{len(cradle_corpus)} cradles, {checked} restricted sets, {violations} violations", t0)


def test_criterion_06_rocker_size(cradle_corpus):
    t0 = time.perf_counter()
    bad = 0
    for g, cradle in cradle_corpus:
        r = build_rocker(g, cradle, check_size=False)
        w = omega_size(g)
        bad += len(r.I) > w or len(r.J) > w
    report(6, bad == 0, f"{len(cradle_corpus)} cradles, {bad} with |I| or |J| above omega", t0)


def test_criterion_07_ramsey_extraction():
    t0 = time.perf_counter()
    bad = 0
    for i in range(1000):
        g = gnp(27, "1/2", derive_seed(SEED + 7, i))
        out = ramsey_extract(g, 3, 3)
        vs = out.vertices
        ok = len(vs) == 3 and (is_clique(g, vs) if out.kind is Kind.CLIQUE else is_stable(g, vs))
        bad += not ok
    elapsed = time.perf_counter() - t0
    report(7, bad == 0 and elapsed < 60, f"1000 graphs on 27 vertices, {bad} failures", t0)


def line_graph(base):
    edges = [(u, v) for u in range(base.n) for v in members(base.adj[u]) if u < v]
    pairs = [(i, j) for i in range(len(edges)) for j in range(i) if set(edges[i]) & set(edges[j])]
    return Graph.from_edges(len(edges), pairs)


def unit_interval_graph(rng, n, width):
    xs = sorted(rng.uniform(0, width) for _ in range(n))
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if xs[j] - xs[i] < 1])


def _claw_free_corpus():
    rng = random.Random(SEED + 8)
    out = []
    while len(out) < 200:
        if len(out) % 2 == 0:
            base = gnp(rng.randint(4, 12), rng.choice(["1/4", "1/2"]), rng.getrandbits(64))
            g = line_graph(base)
            if not 1 <= g.n <= 40:
                continue
        else:
            n = rng.randint(1, 40)
            g = unit_interval_graph(rng, n, rng.uniform(1, n / 2 + 1))
        out.append(g)
    return out


def test_criterion_08_star_route():
    t0 = time.perf_counter()
    bad, count = [], 0
    claw = patterns.star(3)
    for g in _claw_free_corpus():
        assert is_free(g, claw)
        count += 1
        w = omega_size(g)
        degree_ok = max(g.degree(v) for v in range(g.n)) < w**3
        cert = star_free_hitting(g, 3)
        if not (degree_ok and verify_hitting_set(g, cert.W) and cert.size <= w**3):
            bad.append(graph6.encode(g))
    report(8, not bad, f"{count} claw-free graphs n<=40, {len(bad)} failures", t0)


def _l1_free_corpus():
    rng = random.Random(SEED + 9)
    l1 = patterns.lt(1)
    out = []
    while len(out) < 200:
        kind = len(out) % 3
        seed = rng.getrandbits(64)
        if kind == 0:
            k = rng.randint(1, 12)
            g = split_graph(k, rng.randint(0, 25 - k), rng.choice(["1/3", "1/2"]), seed)
        elif kind == 1:
            a = rng.randint(1, 11)
            edges = [(i, a + j) for i in range(a) for j in range(i, a)]
            g = Graph.from_edges(2 * a + rng.randint(0, 3), edges)
        else:
            g = random_h_free(rng.randint(5, 10), rng.choice(["1/4", "1/2", "3/4"]), seed, l1, max_tries=10_000)
        assert is_free(g, l1)
        out.append(g)
    return out


def test_criterion_09_lt_route():
    t0 = time.perf_counter()
    failures, invariant_hits, count = [], [], 0
    graphs = [g for g in small_graphs(7) if is_free(g, patterns.lt(1))] + _l1_free_corpus()
    for g in graphs:
        count += 1
        try:
            cert = lt_hitting_set(g, 1)
        except InvariantViolation as exc:
            invariant_hits.append((graph6.encode(g), exc.label))
            continue
        w = omega_size(g)
        if not (verify_hitting_set(g, cert.W) and cert.size <= w**14 and cert.size <= lt_bound(w, 1)):
            failures.append(graph6.encode(g))
    report(9, not failures and not invariant_hits, f"{count} L1-free graphs, {len(failures)} failures, {len(invariant_hits)} invariant violations", t0)


def test_criterion_10_s_and_f_routes():
    t0 = time.perf_counter()
    failures, counts = [], {"S(1,1)": 0, "S(2,1)": 0, "F1": 0}
    for g in small_graphs(6):
        w = omega_size(g)
        for (s, t) in ((1, 1), (2, 1)):
            if is_free(g, patterns.sst(s, t)):
                counts[f"S({s},{t})"] += 1
                cert = sst_hitting_set(g, s, t)
                if not (verify_hitting_set(g, cert.W) and cert.size <= psi_sst_bound(w, s, t)):
                    failures.append((graph6.encode(g), s, t))
        if is_free(g, patterns.ft(1)):
            counts["F1"] += 1
            cert = ft_hitting_set(g, 1)
            if not (verify_hitting_set(g, cert.W) and cert.size <= psi_ft_bound(w, 1)):
                failures.append((graph6.encode(g), "F1"))
    recurrence = [(c, s) for c in range(1, 9) for s in range(1, 4) if psi_sst_bound(c, s, 1) > c ** (2 * s + 1)]
    ok = not failures and not recurrence and all(counts.values())
    report(10, ok, f"members {counts}, {len(failures)} failures, {len(recurrence)} recurrence violations", t0)


def _exact_inner(gg, comp):
    sub, labels = gg.induced(comp)
    return lift(eta_exact(sub)[1], labels)


def test_criterion_11_reduction_helpers():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 11)
    drops_bad = comp_bad = 0
    for i in range(200):
        g = gnp(rng.randint(1, 11), rng.choice(["1/5", "1/2", "4/5"]), derive_seed(SEED + 11, i))
        d = rng.randint(1, 4)
        a = alpha_size(g)
        h = max(1, g.n)
        D = iterated_alpha_reduction(g, g.full, d, exact_provider(h))
        drops_bad += a - alpha_size(g, g.full & ~D) != min(d, a) or popcount(D) > d * h
        # compositions: cutset around an arbitrary vertex set, and a one-part cover
        C = sum(1 << v for v in range(g.n) if rng.random() < 0.25)
        if C != g.full:
            comp_bad += not verify_hitting_set(g, cutset_reduce(g, C, _exact_inner))
        comp_bad += not verify_hitting_set(g, hit_many_times(g, [Part(g.full, g.full, a, exact_provider(h))]))
    report(11, drops_bad == 0 and comp_bad == 0, f"200 instances, {drops_bad} alpha-drop failures, {comp_bad} composition failures", t0)


def test_criterion_12_graph6_round_trip():
    t0 = time.perf_counter()
    bad, count = 0, 0
    for g in small_graphs(6, min_n=0):
        count += 1
        bad += graph6.decode(graph6.encode(g)) != g
    rng = random.Random(SEED + 12)
    for i in range(10_000):
        g = gnp(rng.randint(0, 50), rng.choice(["1/10", "1/2", "9/10"]), derive_seed(SEED + 12, i))
        count += 1
        code = graph6.encode(g)
        bad += graph6.decode(code) != g or graph6.encode(graph6.decode(code)) != code
    elapsed = time.perf_counter() - t0
    report(12, bad == 0 and elapsed < 60, f"{count} round trips, {bad} mismatches", t0)
