import pytest

from coprime_ramsey.support import (
    SupportGraph,
    check_support_model,
    coprime_support_graph,
    decide,
    verify_avoiding_coloring,
)
from coprime_ramsey.thresholds import demands


def test_g30_passes_one_universal():
    g = coprime_support_graph(30)
    v = check_support_model(g)
    assert v.passed and v.case == "one-universal"
    assert g.atom_count == 10


def test_shifted_interval_fails_singleton_coverage():
    g = coprime_support_graph(7, shift=10)  # vertices 11..17
    v = check_support_model(g)
    assert not v.passed
    assert v.failure_reason == "singleton-coverage"
    assert tuple(g.label(a) for a in v.failure_detail) == (3, 5, 7)


def test_extra_edge_fails_adjacency():
    g = coprime_support_graph(30, extra_edges=[(6, 10)])
    v = check_support_model(g)
    assert not v.passed
    assert v.failure_reason == "adjacency-mismatch"
    assert set(v.failure_detail) == {6, 10}


def test_two_universal_vertices_rejected():
    g = SupportGraph(
        atom_count=1,
        vertex_ids=(1, 2, 3),
        supports=(0, 0, 1),
        edges=frozenset({frozenset((1, 2)), frozenset((1, 3)), frozenset((2, 3))}),
    )
    v = check_support_model(g)
    assert not v.passed and v.failure_reason == "empty-support-count"


def test_radical_model_identical():
    plain = coprime_support_graph(30)
    rad = coprime_support_graph(30, use_radical=True)
    assert plain.supports == rad.supports
    assert plain.edges == rad.edges


def test_decide_forcing_small_demands():
    g = coprime_support_graph(30)
    dec = decide(g, demands(3, 3))  # M = 4 <= r = 10
    assert dec.forcing and dec.forcing_condition == "r >= M"
    clique = dec.forcing_clique
    assert len(clique) == g.atom_count + 1
    # forcing cliques are genuine cliques of the stored edge set
    for i, a in enumerate(clique):
        for b in clique[i + 1 :]:
            assert frozenset((a, b)) in g.edges


def test_decide_avoiding_large_demands():
    g = coprime_support_graph(30)
    dec = decide(g, demands(10, 10))  # M = 18 > r = 10
    assert dec.forcing is False
    assert verify_avoiding_coloring(g, dec, demands(10, 10))
    # bins respect capacities k1-2 (one-universal) and k2-1
    assert len(dec.avoiding_bins[0]) <= 8
    assert len(dec.avoiding_bins[1]) <= 9


def test_decide_no_universal_boundary():
    # interval 2..7 has no universal vertex; primes 2,3,5,7 -> r = 4
    g = coprime_support_graph(6, shift=1)
    v = check_support_model(g)
    assert v.passed and v.case == "no-universal"
    dec = decide(g, demands(3, 3))  # M = 4, needs r >= 5: not forcing
    assert dec.forcing is False
    assert verify_avoiding_coloring(g, dec, demands(3, 3))
    dec = decide(g, demands(2, 3))  # M = 3, r >= 4: forcing
    assert dec.forcing
    assert len(dec.forcing_clique) == 4


def test_decide_rejects_broken_model():
    g = coprime_support_graph(30, extra_edges=[(6, 10)])
    with pytest.raises(ValueError):
        decide(g, demands(3, 3))


def test_json_roundtrip():
    g = coprime_support_graph(20)
    g2 = SupportGraph.from_json(g.to_json())
    assert g2.atom_count == g.atom_count
    assert g2.vertex_ids == g.vertex_ids
    assert g2.supports == g.supports
    assert g2.edges == g.edges
