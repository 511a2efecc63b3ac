"""Superconvergence points and the global/superconvergent error ratio."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .fracderiv import as_order, riesz_lobatto_poly
from .interp import gjf_nodes
from .orthopoly import JacobiParam, NodeSet, gauss_jacobi, jacobi_roots, jacobi_table
from .specialfn import DomainError

SCAN_POINTS = 4001
ENDPOINT_WINDOW = 1e-4
BISECTION_STEPS = 60


def _bisect(f, lo: float, hi: float, flo: float, steps: int) -> float:
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sign_change_roots(f, a: float, b: float, scan: int = SCAN_POINTS,
                      steps: int = BISECTION_STEPS) -> np.ndarray:
    """All sign changes of ``f`` on a uniform scan of ``[a, b]``, bisected."""
    xs = np.linspace(a, b, scan)
    fx = f(xs)
    roots = []
    for i in range(scan - 1):
        if fx[i] == 0:
            roots.append(xs[i])
        elif fx[i] * fx[i + 1] < 0:
            roots.append(_bisect(lambda t: float(f(t)), xs[i], xs[i + 1], fx[i], steps))
    if fx[-1] == 0:
        roots.append(xs[-1])
    return np.array(roots)


def lobatto_superconv_points(alpha, N: int, scan: int = SCAN_POINTS,
                             window: float = ENDPOINT_WINDOW) -> NodeSet:
    """Zeros of the Riesz derivative of ``L_{N-1} - L_{N+1}``, for ``0 < alpha < 1``.

    Every zero found is reported; the count is not forced to ``N + 1``.
    """
    order = as_order(alpha)
    if not 0 < order.alpha < 1:
        raise DomainError("Lobatto superconvergence points need 0 < alpha < 1")
    roots = sign_change_roots(lambda x: riesz_lobatto_poly(order, N, x),
                              -1 + window, 1 - window, scan)
    return NodeSet(points=roots, kind="SuperconvPoints")


def gjf_superconv_points(order, N: int) -> NodeSet:
    """Superconvergence points of the GJF fractional interpolant.

    For ``alpha < 2`` these are the interpolation nodes themselves.  For
    larger ``alpha`` they are the zeros of ``P_{N-k+2}^{a/2+k-1, a/2+k-1}``
    (k odd) or ``P_{N-k+3}^{a/2+k-2, a/2+k-2}`` (k even), ``a = alpha*``.
    """
    order = as_order(order)
    if order.alpha < 2:
        rule = gjf_nodes(order, N)
        return NodeSet(points=rule.points, kind="SuperconvPoints", param=rule.param)
    k, astar = order.k, order.alpha_star
    if k % 2:
        deg, shift = N - k + 2, k - 1
    else:
        deg, shift = N - k + 3, k - 2
    if deg < 1:
        raise DomainError(f"N = {N} too small for alpha = {order.alpha}")
    p = JacobiParam(astar / 2 + shift, astar / 2 + shift)
    return NodeSet(points=jacobi_roots(p, deg).points, kind="SuperconvPoints", param=p)


@dataclass(frozen=True)
class RatioReport:
    alpha: float
    N: int
    flavor: str
    global_max: float
    superconv_max: float
    ratio: float
    infinite: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def compute_ratio(curve, points: NodeSet, point_errors: Sequence[float], *,
                  alpha: float = math.nan, N: int = -1, flavor: str = "") -> RatioReport:
    """Global max of ``|error|`` over the curve divided by its max at the points.

    ``curve`` is ``(x, error)`` (or a sequence of pairs).  The global maximum
    also includes the point errors, so the ratio is at least one.
    """
    if isinstance(curve, tuple) and len(curve) == 2 and np.ndim(curve[0]) == 1:
        err = np.asarray(curve[1], dtype=float)
    else:
        err = np.asarray([e for _, e in curve], dtype=float)
    if err.size == 0:
        raise ValueError("empty error curve")
    pe = np.abs(np.asarray(point_errors, dtype=float))
    if len(pe) != len(points):
        raise ValueError("one error value per point expected")
    sc = float(pe.max()) if pe.size else 0.0
    gm = max(float(np.max(np.abs(err))), sc)
    if sc == 0.0:
        return RatioReport(alpha, N, flavor, gm, sc, math.inf, True)
    return RatioReport(alpha, N, flavor, gm, sc, gm / sc)


def fit_loglog_slope(ns, values) -> float:
    """Least-squares slope of ``log(values)`` against ``log(ns)``."""
    ns = np.asarray(ns, dtype=float)
    v = np.asarray(values, dtype=float)
    return float(np.polyfit(np.log(ns), np.log(v), 1)[0])


C0_DEFAULT_NS = tuple(range(20, 201, 20))


def c0_inner_product(alpha: float, N: int) -> float:
    """``(1, P_{N+1}^{a,a})`` in the weight ``(1-x)^a (1+x)^{1-a}``, ``a = alpha/2``.

    Gauss-Jacobi(a, 1-a) with ``N + 2`` nodes integrates it exactly.
    """
    if not 0 < alpha < 2:
        raise DomainError(f"c0 diagnostic needs 0 < alpha < 2, got {alpha}")
    a = alpha / 2
    rule = gauss_jacobi(JacobiParam(a, 1 - a), N + 2)
    return float(rule.weights @ jacobi_table(JacobiParam(a, a), N + 1, rule.points)[N + 1])


@dataclass(frozen=True)
class DecayReport:
    alpha: float
    ns: tuple
    values: tuple
    slope: float

    def to_dict(self) -> dict:
        return asdict(self)


def c0_decay(alpha: float, ns: Sequence[int] = C0_DEFAULT_NS) -> DecayReport:
    ns = tuple(int(n) for n in ns)
    vals = tuple(c0_inner_product(alpha, n) for n in ns)
    return DecayReport(alpha, ns, vals, fit_loglog_slope(ns, np.abs(vals)))
