"""Command-line front door: regenerate result tables, verify certificates.

Every subcommand prints one deterministic CSV (LF endings) and, when a
matching golden file exists under --golden-dir, compares against it.

Exit codes: 0 all checks matched, 1 mismatch against golden, 2 unknown
verdicts present, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import balanced as balanced_mod
from . import graph as graph_mod
from . import primes as primes_mod
from . import sat as sat_mod
from . import search as search_mod
from . import support as support_mod
from .certificates import (
    canonical_bins,
    certificate_from_json,
    verify_divisor_certificate,
)
from .thresholds import (
    demands,
    r_cop,
    rank_trigger,
    shifted_upper_bound,
    transfer_bound_table,
    trigger_threshold,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


def parse_range(text: str) -> list[int]:
    """Accepts "2..21", "3,5,7", or "4"."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError("empty range")
    return out


def csv_text(header: list[str], rows: list[list]) -> str:
    def cell(x) -> str:
        s = "yes" if x is True else "no" if x is False else str(x)
        if any(ch in s for ch in ',"\n'):
            s = '"' + s.replace('"', '""') + '"'
        return s

    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell(x) for x in row))
    return "\n".join(lines) + "\n"


def budget_nodes(args) -> int:
    ms = args.budget_ms or int(os.environ.get("RAMSEY_BUDGET_MS", "0")) or 60_000
    # coarse calibration: the backtracker visits roughly 10^3 nodes per ms
    return max(10_000, ms * 1000)


# ---------------------------------------------------------------------------
# table builders (header, rows, unknown_present)


def table_values(args):
    rows = []
    for k in parse_range(args.k):
        d = demands(k, k)
        r = r_cop(d)
        ratio = round(r / (k * math.log(k)), 3) if k >= 2 else float("nan")
        rows.append([k, d.M, r, f"{ratio:.3f}"])
    return ["k", "prime_index", "R", "ratio_k_log_k"], rows, False


_MIXED_EXAMPLES = [(3,) * 2, (3,) * 3, (3,) * 4, (3,) * 5, (3,) * 6,
                   (3, 4), (3, 5), (4, 5), (5, 7)]


def table_mixed(args):
    rows = []
    for ks in _MIXED_EXAMPLES:
        d = demands(*ks)
        rows.append([";".join(str(k) for k in ks), d.colors, d.M, r_cop(d)])
    return ["demands", "colors", "M", "R"], rows, False


_RANK_ROWS = [("vertex", (4, 4)), ("edge", (3, 3)), ("edge", (3, 4)), ("edge", (3, 5)),
              ("edge", (4, 4)), ("edge", (3, 3, 3))]


def table_rank(args):
    rows = []
    for mode, ks in _RANK_ROWS:
        trig = rank_trigger(demands(*ks), mode)
        rows.append([mode, ";".join(map(str, ks)), trig, trigger_threshold(trig)])
    return ["mode", "demands", "trigger_rank", "threshold"], rows, False


def table_edge(args):
    rows = []
    for key, cl, tr in transfer_bound_table():
        rows.append([";".join(map(str, key)), cl.lower, cl.upper, tr.lower, tr.upper,
                     "exact" if cl.exact else "window"])
    return ["demands", "classical_lower", "classical_upper",
            "transfer_lower", "transfer_upper", "kind"], rows, False


def table_sat_diag(args):
    ks = parse_range(args.k)
    if not args.extended:
        ks = [k for k in ks if k <= 8]
    rows = [list(r) for r in sat_mod.diagnostics_table(ks)]
    return ["k", "R", "rank", "all_cliques", "prime_cliques", "clauses"], rows, False


def table_labels(args):
    rows = []
    for n in parse_range(args.n):
        g = graph_mod.interval_graph(n)
        rank, _ = graph_mod.clique_number(g)
        edges, coll = graph_mod.label_collision_scan(g)
        rows.append([n, rank, edges, coll])
    return ["n", "rank", "coprime_edges", "collisions"], rows, False


def table_imbalance(args):
    rows = []
    for k, n, hi, lo, imb, frac in balanced_mod.imbalance_table(parse_range(args.k)):
        rows.append([k, n, f"{hi}:{lo}", imb, f"{frac:.3f}"])
    return ["k", "n", "sizes", "imbalance", "minority_fraction"], rows, False


def table_shifted(args):
    unknown = False
    rows = []
    nodes = budget_nodes(args)
    if args.certs:
        ms, ks = parse_range(args.cert_m), parse_range(args.cert_k)
        scan = search_mod.shifted_lower_cert_scan(ms, ks)
        for k in ks:
            hits = sum(1 for (m, kk), ok in scan.items() if kk == k and ok)
            total = sum(1 for (m, kk) in scan if kk == k)
            rows.append([k, total, hits])
        return ["k", "shifts_scanned", "shifts_with_certificate"], rows, False
    for m in parse_range(args.m):
        row: list = [m]
        for k in parse_range(args.k):
            res = search_mod.threshold(m, demands(k, k), budget=nodes)
            if res.status == "exact":
                row.append(res.value)
                bound = shifted_upper_bound(m, k)
                if res.value > bound:
                    raise AssertionError(f"oracle value {res.value} beats the pigeonhole bound")
            else:
                row.append("unknown")
                unknown = True
        rows.append(row)
    header = ["m"] + [f"k{k}" for k in parse_range(args.k)]
    return header, rows, unknown


def table_balanced_split(args):
    rows = []
    for k in parse_range(args.k):
        spec, _, w = balanced_mod.skip2_split(k)
        sizes = w.color_sizes(2)
        threshold = spec.n + 1
        assert threshold == r_cop(demands(k, k))
        rows.append([k, threshold, spec.n, f"{sizes[0]}:{sizes[1]}"])
    return ["k", "balanced_threshold", "last_feasible", "sizes"], rows, False


def table_window(args):
    rows = [list(r) for r in balanced_mod.window_rows(parse_range(args.k))]
    return ["k", "n", "forced0", "theorem", "window"], rows, False


def table_offdiag(args):
    pairs = [tuple(int(x) for x in p.split(":")) for p in args.pairs.split(",")]
    rows = [list(r) for r in balanced_mod.offdiag_rows(pairs)]
    return ["s", "t", "n", "forced0", "forced1", "flexible", "balanced"], rows, False


def table_phase(args):
    rows = []
    for c in parse_range(args.c):
        s = balanced_mod.phase_scan(c, range(3, args.kmax + 1))
        rows.append([c, s.last_failure, s.all_success_from])
    return ["c", "last_failure", "all_success_from"], rows, False


def table_endpoint(args):
    unknown = False
    rows = []
    nodes = budget_nodes(args)
    for c in parse_range(args.c):
        for k in parse_range(args.k):
            dec = search_mod.balanced_endpoint_decide(c, k, budget=nodes)
            n = primes_mod.nth(c * (k - 1)) - 1
            rows.append([c, k, n, dec.clique_count, dec.status])
            unknown |= dec.status == "unknown"
    return ["c", "k", "n", "cliques", "feasible"], rows, unknown


def table_gap_scan(args):
    table = primes_mod.default_table(min_index=2 * args.m_max + 10)
    (g1, m1), (g2, m2) = primes_mod.gap_scan(table, args.m_max)
    rows = [["p2m_minus_2pm", g1, m1], ["3pm_minus_p2m", g2, m2]]
    return ["quantity", "minimum", "argmin"], rows, False


def table_oracle(args):
    unknown = False
    rows = []
    nodes = budget_nodes(args)
    vectors: list[tuple[int, ...]] = []

    def gen(prefix, m_left, last):
        if prefix:
            vectors.append(tuple(prefix))
        for k in range(2, min(last, m_left + 1) + 1):
            gen(prefix + [k], m_left - (k - 1), k)

    gen([], args.max_m, args.max_m + 1)
    for ks in sorted(set(vectors), key=lambda v: (len(v), v)):
        d = demands(*ks)
        res = search_mod.threshold(0, d, budget=nodes)
        formula = r_cop(d)
        if res.status == "exact":
            rows.append([";".join(map(str, ks)), formula, res.value, res.value == formula])
        else:
            rows.append([";".join(map(str, ks)), formula, "unknown", "unknown"])
            unknown = True
    return ["demands", "formula", "oracle", "agree"], rows, unknown


_SUPPORT_BUILTINS = {
    "g30": lambda: support_mod.coprime_support_graph(30),
    "g30-extra": lambda: support_mod.coprime_support_graph(30, extra_edges=[(6, 10)]),
    "interval-11-17": lambda: support_mod.coprime_support_graph(7, shift=10),
}


def cmd_support_check(args) -> int:
    if args.builtin:
        g = _SUPPORT_BUILTINS[args.builtin]()
    elif args.input:
        g = support_mod.SupportGraph.from_json(Path(args.input).read_text())
    else:
        print("support-check needs --builtin or --input", file=sys.stderr)
        return EXIT_USAGE
    verdict = support_mod.check_support_model(g)
    if not verdict.passed:
        detail = verdict.failure_detail
        if verdict.failure_reason == "singleton-coverage":
            detail = tuple(g.label(a) for a in detail)
        detail = " ".join(str(x) for x in detail)
        print(f"fail {verdict.failure_reason} {detail}")
        return EXIT_OK if args.expect_fail else EXIT_MISMATCH
    d = demands(*[int(x) for x in args.demands.split(",")])
    dec = support_mod.decide(g, d)
    what = "forcing" if dec.forcing else "avoiding"
    print(f"pass {verdict.case} r={g.atom_count} M={d.M} {what}")
    if dec.forcing:
        print("clique " + " ".join(map(str, dec.forcing_clique)))
    else:
        if not support_mod.verify_avoiding_coloring(g, dec, d):
            print("avoiding coloring failed re-verification", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    data = json.loads(Path(args.input).read_text())
    w, bins, d = certificate_from_json(data)
    if bins is None:
        bins = canonical_bins(w.length, d)
    verdict = verify_divisor_certificate(w, bins, d)
    print("accept" if verdict else f"reject: {verdict.reason}")
    return EXIT_OK if verdict else EXIT_MISMATCH


def cmd_encode_cnf(args) -> int:
    out = Path(args.out)
    with out.open("wb") as fh:
        sat_mod.stream_dimacs(args.n, args.k, args.c, fh, comment=args.comment)
    return EXIT_OK


_TABLES = {
    "values": table_values,
    "mixed": table_mixed,
    "rank-table": table_rank,
    "edge-table": table_edge,
    "sat-diag": table_sat_diag,
    "labels": table_labels,
    "imbalance": table_imbalance,
    "shifted": table_shifted,
    "balanced-split": table_balanced_split,
    "window": table_window,
    "offdiag": table_offdiag,
    "phase": table_phase,
    "endpoint-decide": table_endpoint,
    "gap-scan": table_gap_scan,
    "oracle": table_oracle,
}


def run_table(name: str, args) -> int:
    header, rows, unknown = _TABLES[name](args)
    text = csv_text(header, rows)
    if args.out:
        Path(args.out).write_text(text, newline="")
    else:
        sys.stdout.write(text)
    if getattr(args, "certs", False):
        name = f"{name}-certs"
    golden = Path(args.golden_dir) / f"{name}.csv"
    if args.write_golden:
        golden.parent.mkdir(parents=True, exist_ok=True)
        golden.write_text(text, newline="")
        return EXIT_UNKNOWN if unknown else EXIT_OK
    if golden.exists():
        if golden.read_text() != text:
            print(f"mismatch against {golden}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_UNKNOWN if unknown else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coprime-ramsey",
        description="Exact coprime Ramsey thresholds, certificates, and diagnostics.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, **defaults):
        p = sub.add_parser(name)
        p.add_argument("--out", default=None)
        p.add_argument("--golden-dir", default="golden")
        p.add_argument("--write-golden", action="store_true")
        p.add_argument("--budget-ms", type=int, default=None)
        for flag, val in defaults.items():
            if isinstance(val, bool):
                p.add_argument(f"--{flag}", action="store_true")
            elif isinstance(val, int):
                p.add_argument(f"--{flag}", type=int, default=val)
            else:
                p.add_argument(f"--{flag}", default=val)
        return p

    add("values", k="2..21")
    add("mixed")
    add("rank-table")
    add("edge-table")
    add("sat-diag", k="3..8", extended=False)
    add("labels", n="10,30,60,100,250,500,1000,2000,5000")
    add("imbalance", k="2..13")
    add("shifted", m="2,3,5,10,20,30,40,50", k="3..5", certs=False,
        **{"cert-m": "2..50", "cert-k": "3..7"})
    add("balanced-split", k="3..9")
    add("window", k="3..10,15,20,30,50,100,200,500,1000")
    add("offdiag", pairs="3:4,3:10,10:30,50:50,100:150,1000:1000")
    add("phase", c="3..10", kmax=100)
    add("endpoint-decide", c="3..4", k="3")
    add("gap-scan", **{"m-max": 1_000_000})
    add("oracle", **{"max-m": 6})

    p = sub.add_parser("support-check")
    p.add_argument("--builtin", choices=sorted(_SUPPORT_BUILTINS))
    p.add_argument("--input", default=None)
    p.add_argument("--demands", default="10,10")
    p.add_argument("--expect-fail", action="store_true")

    p = sub.add_parser("verify")
    p.add_argument("input")

    p = sub.add_parser("encode-cnf")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--out", required=True)
    p.add_argument("--comment", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        if args.command in _TABLES:
            return run_table(args.command, args)
        if args.command == "support-check":
            return cmd_support_check(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "encode-cnf":
            return cmd_encode_cnf(args)
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
