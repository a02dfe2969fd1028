#!/usr/bin/env python3
"""Regenerate every golden CSV from scratch.

Runs each table-producing CLI subcommand with --write-golden, then reruns
it in comparison mode so a non-deterministic regression fails immediately.
"""

import argparse
import sys

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
    args = parser.parse_args()

    for cmd in TABLE_COMMANDS:
        base = cmd + ["--golden-dir", args.golden_dir]
        print(f"[regen] {' '.join(cmd)}", flush=True)
        rc = cli.main(base + ["--write-golden"])
        if rc != 0:
            print(f"[regen] write failed (exit {rc})", file=sys.stderr)
            return rc
        rc = cli.main(base)
        if rc != 0:
            print(f"[regen] recomparison failed (exit {rc})", file=sys.stderr)
            return rc
    print("[regen] all golden tables rewritten and verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
