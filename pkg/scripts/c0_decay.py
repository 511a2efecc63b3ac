"""Decay of (1, P_{N+1}^{a/2,a/2}) in the weight (1-x)^{a/2} (1+x)^{1-a/2}."""

from __future__ import annotations

import argparse
from pathlib import Path

from rieszsc.cli import main as cli

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results/c0/c0.csv"))
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    cli(["c0-decay", "--alpha", "1.01,1.45,1.99", "--n", ",".join(str(n) for n in range(10, 201, 10)),
         "--out", str(args.out)])
    print(args.out.with_name(args.out.stem + "_slopes.csv").read_text(), end="")
