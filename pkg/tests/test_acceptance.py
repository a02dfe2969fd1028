"""Acceptance gate: one test per top-level criterion, each printing a
single PASS line on success (run with -s or check captured output)."""

import math
import re
import shutil
import subprocess
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from coprime_ramsey import balanced, graph, primes, sat, search, support
from coprime_ramsey.certificates import (
    build_prime_bin_coloring,
    nu_packing,
    pigeonhole_refute,
    verify_divisor_certificate,
)
from coprime_ramsey.thresholds import (
    demands,
    r_cop,
    r_cop_edge,
    shifted_upper_bound,
    RamseyBound,
)

REPO = Path(__file__).resolve().parents[1]


def ok(label):
    print(f"PASS: {label}")


def all_demand_vectors(max_m):
    out = []

    def gen(prefix, m_left, last):
        if prefix:
            out.append(tuple(prefix))
        for k in range(2, min(last, m_left + 1) + 1):
            gen(prefix + [k], m_left - (k - 1), k)

    gen([], max_m, max_m + 1)
    return sorted({v for v in out if len(v) >= 2})


def test_exact_values_table():
    expected = [
        (2, 2, 3, "2.164"), (3, 4, 7, "2.124"), (4, 6, 13, "2.344"),
        (5, 8, 19, "2.361"), (6, 10, 29, "2.698"), (7, 12, 37, "2.716"),
        (8, 14, 43, "2.585"), (9, 16, 53, "2.680"), (10, 18, 61, "2.649"),
        (11, 20, 71, "2.692"), (12, 22, 79, "2.649"), (13, 24, 89, "2.669"),
        (14, 26, 101, "2.734"), (15, 28, 107, "2.634"), (16, 30, 113, "2.547"),
        (17, 32, 131, "2.720"), (18, 34, 139, "2.672"), (19, 36, 151, "2.699"),
        (20, 38, 163, "2.721"), (21, 40, 173, "2.706"),
    ]
    for k, idx, r, ratio in expected:
        d = demands(k, k)
        assert d.M == idx
        assert r_cop(d) == r
        assert f"{r / (k * math.log(k)):.3f}" == ratio
    ok("exact diagonal values, prime indices, and growth ratios (21 rows)")


def test_oracle_equivalence():
    for ks in all_demand_vectors(6):
        d = demands(*ks)
        res = search.threshold(0, d)
        assert res.status == "exact" and res.value == r_cop(d), ks
    ok("search oracle threshold equals the formula for every demand vector with M <= 6")


def test_sat_scale_diagnostics():
    expected = {
        3: (7, 5, 19, 10, 52), 4: (13, 7, 151, 35, 328), 5: (19, 9, 831, 126, 1700),
        6: (29, 11, 7803, 462, 15664), 7: (37, 13, 42708, 1716, 85490),
        8: (43, 15, 186945, 6435, 373976), 9: (53, 17, 1280587, 24310, 2561280),
        10: (61, 19, 6237154, 92378, 12474430),
    }
    rows = sat.diagnostics_table(range(3, 11))
    for k, n, rank, cliques, pcl, clauses in rows:
        assert (n, rank, cliques, pcl, clauses) == expected[k], k
    ok("SAT-scale diagnostics k = 3..10 (cliques, C(2k-1,k), clause counts)")


def test_label_injectivity():
    expected = {10: 31, 30: 277, 60: 1101, 100: 3043, 250: 19023,
                500: 76115, 1000: 304191, 2000: 1216587, 5000: 7600457}
    for n, edges in expected.items():
        got, collisions = graph.label_collision_scan(graph.interval_graph(n))
        assert got == edges and collisions == 0, n
        assert graph.coprime_edge_count(n) == edges, n
    ok("label injectivity on coprime edges up to n = 5000, zero collisions")


def test_prime_gap_scan():
    table = primes.default_table(min_index=2_000_123)
    (g1, m1), (g2, m2) = primes.gap_scan(table, 1_000_000)
    assert (g1, m1) == (1, 2)
    assert (g2, m2) == (2, 2)
    # strict positivity over the finite lemma range
    (h1, _), (h2, _) = primes.gap_scan(table, 6076)
    assert h1 >= 1 and h2 >= 1
    ok("prime-index gap minima (1 and 2, both at m = 2) over m <= 10^6")


def test_balanced_endpoint_skip2():
    for k in range(3, 501):
        spec, forced, w = balanced.skip2_split(k)
        assert len(forced.forced0) == spec.n // 2 - (k - 2), k
        sizes = w.color_sizes(2)
        assert sizes[0] == sizes[1] == spec.n // 2, k
        assert verify_divisor_certificate(w, spec.bins, demands(k, k)), k
    rows = {r[0]: r for r in balanced.window_rows([10, 100])}
    assert rows[10] == (10, 60, 22, 22, 17)
    assert rows[100][2] == 508
    ok("skip-2 split balanced + certified for all 3 <= k <= 500, forced sizes exact")


def test_offdiagonal_balance_grid():
    for s, t, n, f0, f1, fl in [(3, 4, 10, 4, 4, 2), (3, 10, 30, 5, 14, 11),
                                (50, 50, 520, 212, 63, 245)]:
        spec, forced, w = balanced.offdiag_split(s, t)
        assert (spec.n, len(forced.forced0), len(forced.forced1), len(forced.flexible)) == (n, f0, f1, fl)
    for s in range(2, 201):
        for t in range(2, 201):
            spec, _, w = balanced.offdiag_split(s, t)
            sizes = w.color_sizes(2)
            assert sizes[0] == sizes[1], (s, t)
            assert verify_divisor_certificate(w, spec.bins, demands(s, t)), (s, t)
    ok("off-diagonal splits balanced + certified on the full 2 <= s,t <= 200 grid")


def test_multicolor_defect_and_phase():
    dec = search.balanced_endpoint_decide(3, 3)
    assert dec.status == "infeasible" and dec.clique_count == 79
    onsets = {}
    for c in range(3, 11):
        summary = balanced.phase_scan(c, range(3, 101))
        onsets[c] = summary.all_success_from
    assert onsets == {3: 6, 4: 8, 5: 15, 6: 16, 7: 24, 8: 28, 9: 37, 10: 53}
    ok("endpoint (3,3) infeasible with 79 cliques; phase onsets c = 3..10 match")


def test_edge_reduction():
    assert r_cop_edge(demands(3, 3)) == RamseyBound(11, 11)
    assert r_cop_edge(demands(5, 5)) == RamseyBound(181, 197)
    assert r_cop_edge(demands(7, 10)) == RamseyBound(1901, 18493)
    from coprime_ramsey.thresholds import transfer_bound_table

    for _, cl, tr in transfer_bound_table():
        assert tr.lower == primes.nth(cl.lower - 1)
        assert tr.upper == primes.nth(cl.upper - 1)
    ok("edge-coloring reduction via p_(N-1) transfer on every embedded classical entry")


def test_shifted_intervals():
    table9 = {2: (9, 15, 21), 3: (8, 14, 20), 5: (8, 14, 20), 10: (7, 13, 19),
              20: (9, 17, 23), 30: (7, 13, 23), 40: (7, 13, 19), 50: (9, 17, 23)}
    for m, row in table9.items():
        got = search.threshold(m, demands(3, 3)).value
        assert got == row[0], (m, got)
    for m in (2, 10, 50):
        for j, k in enumerate((4, 5), start=1):
            got = search.threshold(m, demands(k, k)).value
            assert got == table9[m][j], (m, k, got)
        for k in (3, 4, 5):
            assert search.threshold(m, demands(k, k)).value <= shifted_upper_bound(m, k)
    scan = search.shifted_lower_cert_scan(range(2, 51), range(3, 8))
    assert not any(scan.values())
    ok("shifted-interval exact thresholds, pigeonhole dominance, zero naive certificates")


def test_support_primitive():
    g = support.coprime_support_graph(30)
    v = support.check_support_model(g)
    assert v.passed and v.case == "one-universal"

    bad = support.coprime_support_graph(7, shift=10)
    v2 = support.check_support_model(bad)
    assert v2.failure_reason == "singleton-coverage"
    assert tuple(bad.label(a) for a in v2.failure_detail) == (3, 5, 7)

    extra = support.coprime_support_graph(30, extra_edges=[(6, 10)])
    v3 = support.check_support_model(extra)
    assert v3.failure_reason == "adjacency-mismatch" and set(v3.failure_detail) == {6, 10}

    forcing = support.decide(g, demands(3, 3))
    assert forcing.forcing
    for a, b in combinations(forcing.forcing_clique, 2):
        assert frozenset((a, b)) in g.edges
    avoiding = support.decide(g, demands(10, 10))
    assert not avoiding.forcing
    assert support.verify_avoiding_coloring(g, avoiding, demands(10, 10))
    ok("support primitive: all three diagnostic rows plus verified decide outputs")


def test_property_suites():
    rng = np.random.default_rng(7)
    for ks in all_demand_vectors(8):
        d = demands(*ks)
        n = r_cop(d)
        for _ in range(1000 // len(all_demand_vectors(8)) + 25):
            colors = rng.integers(1, d.colors + 1, size=n)
            assert pigeonhole_refute(colors, d) is not None, ks

    for ks in all_demand_vectors(8):
        d = demands(*ks)
        w, bins = build_prime_bin_coloring(r_cop(d) - 1, d)
        assert verify_divisor_certificate(w, bins, d), ks
        for i, k in enumerate(d.ks, start=1):
            assert nu_packing(w.color_class(i)) <= k - 1, ks

    for k in (2, 3, 4):
        for n in range(2, 14):
            f = sat.encode(n, k, 2)
            via_sat = sat.dpll(f.clauses, f.num_vars) is not None
            via_search = bool(search.avoidable(search.build_problem(n, demands(k, k))))
            assert via_sat == via_search, (n, k)
    ok("pigeonhole vs random colorings, nu-packing certificate checks, DIMACS-oracle agreement")


def _frontend_cli():
    dist = REPO / "frontend" / "dist" / "cli.js"
    if not dist.exists():
        subprocess.run(
            ["npm", "run", "build"], cwd=REPO / "frontend", check=True, capture_output=True
        )
    return dist


def test_secondary_figures(tmp_path):
    if shutil.which("node") is None:
        pytest.fail("node is required for the figure lane")
    cli = _frontend_cli()
    inputs = {
        "growth": "values.csv",
        "shifted": "shifted.csv",
        "balanced": "balanced-split.csv",
        "deterministic-margins": "imbalance.csv",
        "skip2-forced": "window.csv",
        "multicolor-margins": "phase.csv",
        "sat-scale": "sat-diag.csv",
        "k10-strip": "k10-witness.json",
        "offdiag-heatmap": "offdiag.csv",
    }
    for fig, src in inputs.items():
        out = tmp_path / f"{fig}.svg"
        proc = subprocess.run(
            ["node", str(cli), "render", "--figure", fig,
             "--in", str(REPO / "golden" / src), "--out", str(out)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, (fig, proc.stderr)
        assert out.read_text().startswith("<svg ")
    strip = (tmp_path / "k10-strip.svg").read_text()
    cells = re.findall(r'<rect [^>]*fill="([^"]+)"', strip)
    assert len(cells) == 60
    counts = sorted((cells.count(f) for f in set(cells)), reverse=True)
    assert counts == [51, 9]
    ok("all nine figures render from golden inputs; k=10 strip has 51 + 9 cells")
