"""Lobatto interpolation of (1+x)^9 (1-x)^9: error curves at N = 11 and gain slopes.

Writes CSV/JSON tables under ``results/lobatto`` (override with ``--out``).
"""

from __future__ import annotations

import argparse
from pathlib import Path

from rieszsc.cli import main as cli

ALPHAS = "0.01,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,0.99"


def run(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for a in ("0.1", "0.3", "0.5", "0.7", "0.9"):
        cli(["error-curve", "--flavor", "lobatto", "--fn", "poly9", "--alpha", a, "--n", "11",
             "--out", str(out / f"curve_alpha{a}.csv")])
    cli(["ratio-study", "--flavor", "lobatto", "--fn", "poly9", "--alpha", ALPHAS,
         "--n", "8,10,12,14,16", "--out", str(out / "ratios.csv")])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/lobatto"))
    run(ap.parse_args().out)
