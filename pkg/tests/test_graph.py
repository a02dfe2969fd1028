import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from coprime_ramsey import graph, primes


def brute_cliques(shift, length, k):
    verts = range(shift + 1, shift + length + 1)
    return [
        q for q in combinations(verts, k)
        if all(math.gcd(a, b) == 1 for a, b in combinations(q, 2))
    ]


def test_clique_number_is_prime_clique():
    g = graph.interval_graph(30)
    size, witness = graph.clique_number(g)
    assert size == 11
    assert witness == [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(math.gcd(a, b) == 1 for a, b in combinations(witness, 2))


def test_adjacency_matches_gcd_and_support_disjointness():
    g = graph.interval_graph(40)
    for a in range(1, 41):
        for b in range(a + 1, 41):
            adj = graph.adjacency(g, a, b)
            assert adj == (math.gcd(a, b) == 1)
            assert adj == (g.mask(a) & g.mask(b) == 0)


def test_adjacency_rejects_bad_vertices():
    g = graph.interval_graph(10)
    with pytest.raises(ValueError):
        graph.adjacency(g, 1, 11)
    with pytest.raises(ValueError):
        graph.adjacency(g, 3, 3)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=2, max_value=18),
    st.integers(min_value=2, max_value=5),
    st.integers(min_value=0, max_value=25),
)
def test_clique_count_matches_brute_force(length, k, shift):
    g = graph.interval_graph(length, shift=shift)
    expected = brute_cliques(shift, length, k)
    assert graph.enumerate_coprime_cliques(g, k) == len(expected)


def test_visitor_lexicographic_and_complete():
    g = graph.interval_graph(12)
    seen = []
    count = graph.enumerate_coprime_cliques(g, 3, visitor=seen.append)
    assert count == len(seen)
    assert seen == sorted(seen)
    assert seen == brute_cliques(0, 12, 3)


def test_visitor_and_counting_paths_agree():
    g = graph.interval_graph(25)
    for k in (2, 3, 4, 5):
        seen = []
        graph.enumerate_coprime_cliques(g, k, visitor=seen.append)
        assert graph.enumerate_coprime_cliques(g, k) == len(seen)


def test_known_clique_counts():
    assert graph.enumerate_coprime_cliques(graph.interval_graph(7), 3) == 19
    assert graph.enumerate_coprime_cliques(graph.interval_graph(13), 4) == 151
    assert graph.enumerate_coprime_cliques(graph.interval_graph(19), 5) == 831


def test_edge_count_mobius_vs_brute():
    for n in (1, 2, 10, 30, 57, 100):
        assert graph.coprime_edge_count(n) == len(brute_cliques(0, n, 2))


def test_label_scan_matches_independent_edge_count():
    for n in (10, 30, 60, 100, 250):
        g = graph.interval_graph(n)
        edges, collisions = graph.label_collision_scan(g)
        assert edges == graph.coprime_edge_count(n)
        assert collisions == 0


def test_label_scan_blocking_invariance():
    g = graph.interval_graph(123)
    assert graph.label_collision_scan(g, block=7) == graph.label_collision_scan(g, block=512)


def test_label_scan_requires_standard_graph():
    with pytest.raises(ValueError):
        graph.label_collision_scan(graph.interval_graph(10, shift=5))


def test_k_larger_than_interval():
    g = graph.interval_graph(3)
    assert graph.enumerate_coprime_cliques(g, 5) == 0
    with pytest.raises(ValueError):
        graph.enumerate_coprime_cliques(g, 1)
