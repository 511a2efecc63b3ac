"""Error curves and gain-ratio sweeps shared by the CLI, scripts and tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .fde_solver import SOLVERS, Solution, manufactured_rhs
from .fracderiv import as_order
from .interp import (
    default_grid,
    gjf_error_expansion,
    gjf_interpolate,
    lobatto_interpolate,
    riesz_error_curve,
)
from .orthopoly import NodeSet
from .problems import TRUTH_DPS, TRUTH_MODES, Problem
from .superconv import (
    RatioReport,
    compute_ratio,
    fit_loglog_slope,
    gjf_superconv_points,
    lobatto_superconv_points,
)

FLAVORS = ("lobatto", "gjf")
METHODS = ("pg", "colloc")
PRECISIONS = ("extended", "double")


@dataclass(frozen=True)
class ErrorCurve:
    """``R D^alpha (u - u_N)`` on a grid and at the superconvergence points."""

    alpha: float
    N: int
    label: str
    x: np.ndarray
    error: np.ndarray
    points: NodeSet
    point_error: np.ndarray

    def ratio(self) -> RatioReport:
        return compute_ratio((self.x, self.error), self.points, self.point_error,
                             alpha=self.alpha, N=self.N, flavor=self.label)


def _grid(grid) -> np.ndarray:
    if grid is None:
        return default_grid()
    if np.ndim(grid) == 0:
        return default_grid(int(grid))
    return np.asarray(grid, dtype=float)


def interpolation_error(flavor: str, problem: Problem, alpha: float, N: int,
                        grid=None, precision: str = "extended") -> ErrorCurve:
    """Interpolate ``problem.u`` and compare Riesz derivatives with the truth.

    For the GJF flavor with a problem that carries its smooth factor, the
    ``extended`` precision route forms the coefficient defect at extended
    precision before evaluating (see :func:`gjf_error_expansion`).
    """
    x = _grid(grid)
    order = as_order(alpha)
    if flavor == "lobatto":
        interp = lobatto_interpolate(problem.u, N, order)
        pts = lobatto_superconv_points(order, N)
        _, err = riesz_error_curve(interp, problem.truth, x, order)
        _, perr = riesz_error_curve(interp, problem.truth, pts, order)
    elif flavor == "gjf":
        pts = gjf_superconv_points(order, N)
        if precision == "extended" and problem.smooth is not None:
            defect = gjf_error_expansion(problem.smooth, order, N, TRUTH_MODES, dps=TRUTH_DPS)
            err, perr = defect.riesz(x), defect.riesz(pts.points)
        else:
            interp = gjf_interpolate(problem.u, order, N)
            _, err = riesz_error_curve(interp, problem.truth, x)
            _, perr = riesz_error_curve(interp, problem.truth, pts)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return ErrorCurve(order.alpha, N, flavor, x, np.asarray(err), pts, np.asarray(perr))


def solver_error(method: str, problem: Problem, alpha: float, N: int,
                 grid=None) -> tuple[Solution, ErrorCurve]:
    """Solve the model FDE manufactured from ``problem.expansion``."""
    if problem.expansion is None:
        raise ValueError(f"problem {problem.name!r} has no GJF expansion to manufacture from")
    order = as_order(alpha)
    truth = problem.expansion
    sol = SOLVERS[method](order, manufactured_rhs(truth), N)
    x = _grid(grid)
    defect = truth + sol.u.scaled(-1.0)
    pts = gjf_superconv_points(order, N)
    curve = ErrorCurve(order.alpha, N, method, x, defect.riesz(x), pts, defect.riesz(pts.points))
    return sol, curve


@dataclass(frozen=True)
class RatioStudy:
    reports: tuple
    slopes: dict

    def to_dict(self) -> dict:
        return {"records": [r.to_dict() for r in self.reports],
                "slopes": {repr(a): s for a, s in self.slopes.items()}}


def ratio_study(kind: str, problem_factory, alphas: Sequence[float], ns: Sequence[int],
                grid=None, precision: str = "extended") -> RatioStudy:
    """Ratio reports for every ``(alpha, N)``, alpha-major, and slopes per alpha.

    ``kind`` is an interpolation flavor or a solver method.
    """
    reports, slopes = [], {}
    for a in alphas:
        problem = problem_factory(a)
        row = []
        for n in ns:
            if kind in FLAVORS:
                curve = interpolation_error(kind, problem, a, n, grid, precision)
            else:
                curve = solver_error(kind, problem, a, n, grid)[1]
            row.append(curve.ratio())
        reports.extend(row)
        slopes[a] = gain_slope(row)
    return RatioStudy(tuple(reports), slopes)


def gain_slope(reports: Sequence[RatioReport]) -> Optional[float]:
    finite = [r for r in reports if not r.infinite]
    if len(finite) < 2:
        return None
    return fit_loglog_slope([r.N for r in finite], [r.ratio for r in finite])
