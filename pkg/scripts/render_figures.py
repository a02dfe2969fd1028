#!/usr/bin/env python3
"""Render all nine result figures from the golden data via the Node CLI.

Builds frontend/dist with tsc if it is missing, then writes one SVG per
figure id into the output directory.
"""

import argparse
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]

FIGURE_INPUTS = {
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


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--golden-dir", default=str(REPO / "golden"))
    args = parser.parse_args()

    dist = REPO / "frontend" / "dist" / "cli.js"
    if not dist.exists():
        subprocess.run(["npm", "run", "build"], cwd=REPO / "frontend", check=True)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for fig, src in FIGURE_INPUTS.items():
        out = out_dir / f"{fig}.svg"
        subprocess.run(
            ["node", str(dist), "render", "--figure", fig,
             "--in", str(Path(args.golden_dir) / src), "--out", str(out)],
            check=True,
        )
        print(f"[figures] wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
