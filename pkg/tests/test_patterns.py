import itertools
import random

import pytest
from hypothesis import given, settings

from etahit import patterns
from etahit.graph import Graph
from etahit.patterns import check_embedding, find_induced_p5, find_induced_pattern, is_free, parse_pattern
from helpers import brute_contains_induced, graphs, rand_graph


def degree_profile(g):
    return sorted(g.degree(v) for v in range(g.n))


@pytest.mark.parametrize("s,t", [(1, 0), (2, 1), (3, 2), (2, 2)])
def test_sst_shape(s, t):
    g = patterns.sst(s, t).graph
    assert g.n == 1 + s + t
    assert degree_profile(g) == sorted([s] + [1] * s + [0] * t)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_ft_shape(t):
    g = patterns.ft(t).graph
    assert g.n == t + 3
    assert degree_profile(g) == sorted([1] * (t + 1) + [2, t + 1])


@pytest.mark.parametrize("t", [1, 2, 3])
def test_lt_shape(t):
    g = patterns.lt(t).graph
    assert g.n == t + 4
    assert degree_profile(g) == [0] * t + [1] * 4


@pytest.mark.parametrize("t", [1, 2, 3])
def test_mt_shape(t):
    g = patterns.mt(t).graph
    assert g.n == 2 * t and all(g.degree(v) == 1 for v in range(g.n))


def test_star_is_sst_without_isolated():
    assert patterns.star(3).graph == patterns.sst(3, 0).graph


@pytest.mark.parametrize(
    "text, name, n",
    [("P5", "P5", 5), ("K1s:3", "K1,3", 4), ("Sst:2,1", "S(2,1)", 4), ("Ft:1", "F1", 4), ("Lt:1", "L1", 5), ("Mt:2", "M2", 4), ("2K2", "M2", 4)],
)
def test_parse_pattern(text, name, n):
    p = parse_pattern(text)
    assert p.name == name and p.graph.n == n


def test_parse_pattern_graph6_and_errors():
    assert parse_pattern("g6:A_").graph == Graph.complete(2)
    for bad in ["Q7", "K1s:x", "Sst:1", ""]:
        with pytest.raises(ValueError):
            parse_pattern(bad)


def test_find_induced_examples():
    assert find_induced_pattern(Graph.cycle(5), patterns.path(5)) is None
    assert find_induced_pattern(Graph.path(5), patterns.path(5)) == (0, 1, 2, 3, 4)
    assert find_induced_pattern(Graph.complete(4), patterns.star(2)) is None
    assert is_free(Graph.complete(4), patterns.star(2))


def test_f1_is_p4_and_c5_contains_it():
    assert find_induced_pattern(patterns.path(4).graph, patterns.ft(1)) is not None
    assert not is_free(Graph.cycle(5), patterns.ft(1))


PATTERNS = [patterns.path(4), patterns.path(5), patterns.star(3), patterns.sst(2, 1), patterns.ft(1), patterns.lt(1), patterns.mt(2)]


@pytest.mark.parametrize("p", PATTERNS, ids=lambda p: p.name)
def test_detector_agrees_with_subset_enumeration(p):
    rng = random.Random(hash(p.name) % 1000)
    for _ in range(60):
        g = rand_graph(rng, rng.randint(0, 8), rng.choice([0.2, 0.5, 0.8]))
        emb = find_induced_pattern(g, p)
        assert (emb is not None) == brute_contains_induced(g, p.graph)
        if emb is not None:
            assert check_embedding(g, p.graph, emb)


@given(graphs(max_n=10))
@settings(max_examples=300, deadline=None)
def test_p5_fast_path_agrees_with_generic_search(g):
    fast = find_induced_p5(g)
    generic = patterns._embed(g, patterns.path(5).graph, patterns._search_order(patterns.path(5).graph))
    assert (fast is None) == (generic is None)
    if fast is not None:
        assert check_embedding(g, patterns.path(5).graph, fast)


def test_check_embedding_rejects_non_induced():
    assert not check_embedding(Graph.complete(3), Graph.path(3), (0, 1, 2))
    assert check_embedding(Graph.path(3), Graph.path(3), (0, 1, 2))
