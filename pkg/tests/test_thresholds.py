import pytest

from coprime_ramsey import primes, thresholds
from coprime_ramsey.thresholds import (
    ClassicalTable,
    Demands,
    RamseyBound,
    UnknownClassicalValueError,
    demands,
    gcd_scaled_edge,
    hypergraph_edge,
    hypergraph_vertex,
    r_cop,
    r_cop_covering,
    r_cop_edge,
    rank_trigger,
    shifted_upper_bound,
    transfer_bound_table,
    trigger_threshold,
)

DIAGONAL = {2: 3, 3: 7, 4: 13, 5: 19, 6: 29, 7: 37, 8: 43, 9: 53, 10: 61,
            11: 71, 12: 79, 13: 89, 14: 101, 15: 107, 16: 113, 17: 131,
            18: 139, 19: 151, 20: 163, 21: 173}


def test_diagonal_values():
    for k, r in DIAGONAL.items():
        assert r_cop(demands(k, k)) == r
        assert r == primes.nth(2 * k - 2)


def test_mixed_values():
    assert r_cop(demands(3, 3, 3)) == 13
    assert r_cop(demands(3, 3, 3, 3)) == 19
    assert r_cop(demands(3, 3, 3, 3, 3)) == 29
    assert r_cop(demands(3, 3, 3, 3, 3, 3)) == 37
    assert r_cop(demands(3, 4)) == 11
    assert r_cop(demands(3, 5)) == 13
    assert r_cop(demands(4, 5)) == 17
    assert r_cop(demands(5, 7)) == 29


def test_demand_order_irrelevant():
    assert r_cop(demands(3, 5, 4)) == r_cop(demands(5, 4, 3))


def test_covering_equals_vertex():
    for ks in [(3, 3), (4, 5), (3, 3, 3), (10, 10)]:
        assert r_cop_covering(demands(*ks)) == r_cop(demands(*ks))


def test_demands_validation():
    with pytest.raises(ValueError):
        demands(1, 3)
    with pytest.raises(ValueError):
        Demands(())
    d = demands(4, 3, 2)
    assert d.M == 6 and d.colors == 3 and d.key() == (2, 3, 4)


def test_edge_transfer_exact_rows():
    assert r_cop_edge(demands(3, 3)) == RamseyBound(11, 11)
    assert r_cop_edge(demands(3, 4)) == RamseyBound(19, 19)
    assert r_cop_edge(demands(4, 4)) == RamseyBound(59, 59)
    assert r_cop_edge(demands(3, 3, 3)) == RamseyBound(53, 53)


def test_edge_transfer_window_rows():
    assert r_cop_edge(demands(5, 5)) == RamseyBound(181, 197)
    assert r_cop_edge(demands(4, 6)) == RamseyBound(149, 167)
    assert r_cop_edge(demands(7, 10)) == RamseyBound(1901, 18493)


def test_edge_transfer_monotone_in_classical():
    for _, cl, tr in transfer_bound_table():
        assert tr.lower == primes.nth(cl.lower - 1)
        assert tr.upper == primes.nth(cl.upper - 1)
        assert tr.lower <= tr.upper


def test_unknown_classical_raises():
    with pytest.raises(UnknownClassicalValueError):
        r_cop_edge(demands(11, 11))
    with pytest.raises(UnknownClassicalValueError):
        r_cop_edge(demands(8, 8))


def test_classical_table_json_roundtrip():
    text = '[{"demands": [3, 3], "lower": 6, "upper": 6}]'
    t = ClassicalTable.from_json(text)
    assert t.lookup(demands(3, 3)) == RamseyBound(6, 6)
    with pytest.raises(UnknownClassicalValueError):
        t.lookup(demands(4, 4))


def test_gcd_scaled_edge():
    assert gcd_scaled_edge(demands(3, 3), 1) == RamseyBound(11, 11)
    assert gcd_scaled_edge(demands(3, 3), 6) == RamseyBound(66, 66)
    with pytest.raises(ValueError):
        gcd_scaled_edge(demands(3, 3), 0)


def test_hypergraph_analogues():
    assert hypergraph_vertex(3, demands(4, 4)) == r_cop(demands(4, 4))
    with pytest.raises(ValueError):
        hypergraph_vertex(3, demands(2, 4))
    # 3-uniform R(4,4) = 13 maps to p_12 = 37
    b = hypergraph_edge(3, demands(4, 4), thresholds.HYPERGRAPH_CLASSICAL_T3)
    assert b == RamseyBound(37, 37)
    with pytest.raises(UnknownClassicalValueError):
        hypergraph_edge(3, demands(4, 4))
    assert hypergraph_edge(2, demands(3, 3)) == RamseyBound(11, 11)


def test_rank_triggers():
    assert rank_trigger(demands(4, 4), "vertex") == 7
    assert trigger_threshold(7) == 13
    assert rank_trigger(demands(3, 3), "edge") == 6
    assert trigger_threshold(6) == 11
    assert rank_trigger(demands(3, 3, 3), "edge") == 17
    assert trigger_threshold(17) == 53
    assert rank_trigger(demands(4, 4), "edge") == 18
    assert trigger_threshold(18) == 59
    with pytest.raises(UnknownClassicalValueError):
        rank_trigger(demands(5, 5), "edge")  # window, not exact
    with pytest.raises(ValueError):
        rank_trigger(demands(3, 3), "face")


def test_shifted_upper_bound():
    # the 2k-1 prime pigeonhole dominates the exact value (it ignores vertex 1)
    for k in (3, 4, 5):
        assert shifted_upper_bound(0, k) == primes.nth(2 * k - 1)
        assert shifted_upper_bound(0, k) >= r_cop(demands(k, k))
    assert shifted_upper_bound(10, 3) >= 7
    with pytest.raises(ValueError):
        shifted_upper_bound(-1, 3)


def test_gallai_constant_present():
    assert thresholds.GALLAI_TRIANGLE_3 == 11
