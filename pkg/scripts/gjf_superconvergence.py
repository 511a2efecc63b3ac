"""GJF fractional interpolation of (1-x^2)^{alpha/2} / (1 + (x+3)^2).

Error curves at N = 10 and a sweep over N = 6..16 reporting global and
superconvergence-point maxima, the successive global ratios against the
ellipse rate 1/rho, and the fitted gain slope.
"""

from __future__ import annotations

import argparse
import cmath
import json
from pathlib import Path

import numpy as np

from rieszsc.cli import main as cli
from rieszsc.experiments import interpolation_error
from rieszsc.problems import runge_shift
from rieszsc.superconv import fit_loglog_slope


def ellipse_rho() -> float:
    z = complex(-3, 1)
    w = cmath.sqrt(z * z - 1)
    return max(abs(z + w), abs(z - w))


def sweep(alpha: float, ns) -> dict:
    prob = runge_shift(alpha)
    reps = [interpolation_error("gjf", prob, alpha, n).ratio() for n in ns]
    g = np.array([r.global_max for r in reps])
    s = np.array([r.superconv_max for r in reps])
    return {
        "alpha": alpha,
        "N": list(ns),
        "global_max": g.tolist(),
        "superconv_max": s.tolist(),
        "successive_global_ratio": (g[1:] / g[:-1]).tolist(),
        "gain_slope": fit_loglog_slope(ns, g / s),
    }


def run(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for a in ("0.4", "1.7"):
        cli(["error-curve", "--flavor", "gjf", "--fn", "runge-shift", "--alpha", a, "--n", "10",
             "--out", str(out / f"curve_alpha{a}.csv")])
    ns = list(range(6, 17))
    report = {"rho": ellipse_rho(), "sweeps": [sweep(a, ns) for a in (0.4, 1.7)]}
    (out / "decay.json").write_text(json.dumps(report, indent=2) + "\n")
    print(f"rho = {report['rho']:.4f}, 1/rho = {1 / report['rho']:.4f}")
    for s in report["sweeps"]:
        print(f"alpha={s['alpha']}: gain slope {s['gain_slope']:.2f}; ratios "
              + " ".join(f"{q:.3f}" for q in s["successive_global_ratio"]))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/gjf"))
    run(ap.parse_args().out)
