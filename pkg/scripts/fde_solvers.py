"""Model FDE with true solution (1-x^2)^{alpha/2} / (1 + x^2/2).

Error curves for Petrov-Galerkin (alpha = 1.27, N = 13) and collocation
(alpha = 1.84, N = 17), plus gain-ratio studies over N = 9..17.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from rieszsc.cli import main as cli

NS = "9,11,13,15,17"


def run(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    cli(["solve", "--method", "pg", "--alpha", "1.27", "--n", "13", "--out", str(out / "pg_1.27_13.csv")])
    cli(["solve", "--method", "colloc", "--alpha", "1.84", "--n", "17", "--out", str(out / "colloc_1.84_17.csv")])
    cli(["ratio-study", "--method", "pg", "--fn", "fde-true", "--alpha", "1.1,1.52,1.9", "--n", NS,
         "--format", "json", "--out", str(out / "pg_ratios.json")])
    cli(["ratio-study", "--method", "colloc", "--fn", "fde-true", "--alpha", "1.1,1.52,1.9", "--n", NS,
         "--format", "json", "--out", str(out / "colloc_ratios.json")])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/fde"))
    run(ap.parse_args().out)
