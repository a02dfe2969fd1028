#!/usr/bin/env python3
"""Recompute every result table and compare it byte-for-byte against golden/.

Exit status is 0 only if every table matches.  Use --budget-ms to raise the
search budget on slow machines.
"""

import argparse
import sys
import time

from coprime_ramsey import cli

TABLE_COMMANDS = [
    ["values"],
    ["mixed"],
    ["rank-table"],
    ["edge-table"],
    ["sat-diag", "--extended"],
    ["labels"],
    ["imbalance"],
    ["shifted"],
    ["shifted", "--certs"],
    ["balanced-split"],
    ["window"],
    ["offdiag"],
    ["gap-scan"],
    ["oracle"],
    ["endpoint-decide"],
    ["phase"],
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--golden-dir", default="golden")
    parser.add_argument("--budget-ms", type=int, default=None)
    args = parser.parse_args()

    failures = []
    for cmd in TABLE_COMMANDS:
        full = cmd + ["--golden-dir", args.golden_dir]
        if args.budget_ms is not None:
            full += ["--budget-ms", str(args.budget_ms)]
        t0 = time.perf_counter()
        rc = cli.main(full)
        dt = time.perf_counter() - t0
        status = "ok" if rc == 0 else f"FAIL (exit {rc})"
        print(f"[table] {' '.join(cmd):24s} {dt:7.2f}s  {status}", flush=True)
        if rc != 0:
            failures.append(cmd)
    if failures:
        print(f"[table] {len(failures)} table(s) diverged", file=sys.stderr)
        return 1
    print("[table] all tables match golden/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
