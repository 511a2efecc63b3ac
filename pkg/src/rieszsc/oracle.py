"""Independent reference values for the closed-form derivatives.

Two routes, neither of which uses any closed-form fractional derivative of a
Jacobi polynomial:

* :func:`riesz_power_oracle` applies the Riemann-Liouville power rule term by
  term to shifted-power expansions, in extended precision (mpmath).
* :func:`riesz_quadrature_oracle` evaluates the fractional integrals with
  Gauss-Jacobi rules that absorb the weakly singular kernel and endpoint
  factors, then differentiates in ``x`` with a Cauchy contour integral.

These are test-grade tools; they are slow compared with the closed forms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath
import numpy as np

from .fracderiv import RieszOrder, as_order
from .orthopoly import JacobiParam, gauss_jacobi
from .specialfn import DomainError

Terms = Sequence[tuple[float, float]]


def _rl_power_terms(alpha, terms, dps):
    """Prefactors Gamma(p+1)/Gamma(p+1-alpha)*coef and exponents p - alpha."""
    out = []
    for p, c in terms:
        p = mpmath.mpf(p) if not isinstance(p, Fraction) else mpmath.mpf(p.numerator) / p.denominator
        c = mpmath.mpf(c) if not isinstance(c, Fraction) else mpmath.mpf(c.numerator) / c.denominator
        if not p > alpha - 1:
            raise DomainError(f"exponent {p} <= alpha - 1 = {alpha - 1}")
        out.append((c * mpmath.gamma(p + 1) / mpmath.gamma(p + 1 - alpha), p - alpha))
    return out


def riesz_power_oracle(order, left_terms: Terms, right_terms: Terms, x, dps: int = 40):
    """Riesz derivative of ``u`` given as shifted power sums.

    ``left_terms`` lists ``(p, coef)`` with ``u = sum coef (1 + x)^p`` and
    ``right_terms`` the same function as ``sum coef (1 - x)^q``.  Each side
    uses the power rule
    ``D_left^alpha (1+x)^p = Gamma(p+1)/Gamma(p+1-alpha) (1+x)^{p-alpha}``
    and its mirror image for the right derivative.
    """
    order = as_order(order)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(xs.shape)
    with mpmath.workdps(dps):
        alpha = mpmath.mpf(order.alpha)
        lt = _rl_power_terms(alpha, left_terms, dps)
        rt = _rl_power_terms(alpha, right_terms, dps)
        c = mpmath.mpf(order.c_scale)
        for i, xi in enumerate(xs):
            xm = mpmath.mpf(float(xi))
            lo, hi = 1 + xm, 1 - xm
            s = mpmath.mpf(0)
            if lt:
                if lo == 0:
                    raise DomainError("oracle evaluated at x = -1")
                s += mpmath.fsum(f * lo**e for f, e in lt)
            if rt:
                if hi == 0:
                    raise DomainError("oracle evaluated at x = 1")
                s += mpmath.fsum(f * hi**e for f, e in rt)
            out[i] = float(c * s)
    return out if np.ndim(x) else float(out[0])


def power_series_terms(a: float, b: float, count: int = 4000):
    """Expansions of ``(1 + x)^a (1 - x)^b`` in shifted powers.

    Returns ``(left_terms, right_terms)``.  For integer exponents the
    binomial series terminate and the coefficients are exact fractions;
    otherwise the series are truncated after ``count`` terms (convergent for
    ``|x| < 1``, geometrically with ratio ``(1 +- x)/2``).
    """

    def side(p, q):
        # (1+x)^p (2 - (1+x))^q = sum_m 2^q binom(q, m) (-1/2)^m (1+x)^{p+m}
        if float(q).is_integer() and q >= 0:
            q = int(q)
            pf = Fraction(p) if float(p).is_integer() else p
            return [
                (pf + m if isinstance(pf, Fraction) else p + m,
                 Fraction(math.comb(q, m) * 2 ** (q - m) * (-1) ** m))
                for m in range(q + 1)
            ]
        terms = []
        coef = 2.0**q
        for m in range(count):
            terms.append((p + m, coef))
            coef *= -(q - m) / ((m + 1) * 2.0)
        return terms

    return side(a, b), side(b, a)


def legendre_power_terms(coeffs):
    """Exact shifted-power expansions of ``sum_n coeffs[n] L_n(x)``.

    Uses ``L_n(x) = sum_k C(n,k) C(n+k,k) ((x-1)/2)^k`` and parity.
    Coefficients must be exactly representable (integers or fractions).
    """
    N = len(coeffs) - 1
    left = [Fraction(0)] * (N + 1)
    right = [Fraction(0)] * (N + 1)
    for n, cn in enumerate(coeffs):
        cn = Fraction(cn)
        if cn == 0:
            continue
        for k in range(n + 1):
            t = Fraction(math.comb(n, k) * math.comb(n + k, k), 2**k) * (-1) ** k
            right[k] += cn * t
            left[k] += cn * t * (-1) ** n
    return (
        [(Fraction(k), c) for k, c in enumerate(left) if c != 0],
        [(Fraction(k), c) for k, c in enumerate(right) if c != 0],
    )


def _fractional_integral(side: str, gamma: float, smooth, bl: float, br: float,
                         z: np.ndarray, nodes: int) -> np.ndarray:
    """Fractional integral of ``u(t) = (1+t)^bl (1-t)^br g(t)`` at complex ``z``.

    The kernel and the factor at the integration endpoint are folded into the
    Gauss-Jacobi weight after mapping the integration range to [-1, 1].
    """
    if side == "left":
        rule = gauss_jacobi(JacobiParam(gamma - 1, bl), nodes)
        s, w = rule.points, rule.weights
        h = (z[..., None] + 1) / 2
        t = -1 + h * (1 + s)
        f = (1 - t) ** br * smooth(t)
        pref = h[..., 0] ** (gamma + bl)
    else:
        rule = gauss_jacobi(JacobiParam(br, gamma - 1), nodes)
        s, w = rule.points, rule.weights
        h = (1 - z[..., None]) / 2
        t = z[..., None] + h * (1 + s)
        f = (1 + t) ** bl * smooth(t)
        pref = h[..., 0] ** (gamma + br)
    return pref * (f @ w) / math.gamma(gamma)


def rl_quadrature_oracle(side: str, alpha: float, smooth: Callable, x,
                         left_exp: float = 0.0, right_exp: float = 0.0,
                         nodes: int = 96, contour_points: int = 64,
                         radius_fraction: float = 0.5):
    """Riemann-Liouville derivative of ``(1+t)^left_exp (1-t)^right_exp smooth(t)``.

    ``smooth`` must accept complex arrays.  The k-th derivative of the
    fractional integral is taken by the trapezoidal rule on a circle of radius
    ``radius_fraction * (1 - |x|)`` around ``x``.
    """
    if side not in ("left", "right"):
        raise ValueError(side)
    k = math.ceil(alpha)
    gamma = k - alpha
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(np.abs(xs) >= 1):
        raise DomainError("quadrature oracle needs interior points")
    r = radius_fraction * (1 - np.abs(xs))
    theta = 2 * np.pi * np.arange(contour_points) / contour_points
    e = np.exp(1j * theta)
    z = xs[:, None] + r[:, None] * e[None, :]
    F = _fractional_integral(side, gamma, smooth, left_exp, right_exp, z, nodes)
    deriv = math.factorial(k) * np.real(F @ e ** (-k)) / (contour_points * r**k)
    if side == "right":
        deriv = (-1) ** k * deriv
    return deriv if np.ndim(x) else float(deriv[0])


def riesz_quadrature_oracle(order, smooth: Callable, x, left_exp: float = 0.0,
                            right_exp: float = 0.0, **kw):
    """``c * (left RL + right RL)`` of ``(1+t)^left_exp (1-t)^right_exp smooth(t)``."""
    order = as_order(order)
    dl = rl_quadrature_oracle("left", order.alpha, smooth, x, left_exp, right_exp, **kw)
    dr = rl_quadrature_oracle("right", order.alpha, smooth, x, left_exp, right_exp, **kw)
    return order.c_scale * (dl + dr)


def _mp_jacobi_all(a, b, nmax, x):
    """P_0..P_nmax at an mpf point."""
    out = [mpmath.mpf(1)]
    if nmax == 0:
        return out
    out.append((a + 1) + (a + b + 2) * (x - 1) / 2)
    for n in range(2, nmax + 1):
        s = 2 * n + a + b
        c1 = 2 * n * (n + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (n + a - 1) * (n + b - 1) * s
        out.append((c2 * out[-1] - c3 * out[-2]) / c1)
    return out


@lru_cache(maxsize=64)
def mp_gauss_jacobi(a: float, b: float, n: int, dps: int = 40):
    """Gauss-Jacobi nodes and weights as mpf tuples (cached).

    Double-precision nodes are refined by Newton iteration at ``dps`` digits.
    """
    start = gauss_jacobi(JacobiParam(a, b), n).points
    with mpmath.workdps(dps):
        A, B = mpmath.mpf(a), mpmath.mpf(b)
        nodes, weights = [], []
        c = (2 ** (A + B + 1) * mpmath.gamma(n + A + 1) * mpmath.gamma(n + B + 1)
             / (mpmath.gamma(n + A + B + 1) * mpmath.factorial(n)))
        for x0 in start:
            x = mpmath.mpf(float(x0))
            for _ in range(8):
                p = _mp_jacobi_all(A, B, n, x)[n]
                dp = (n + A + B + 1) / 2 * _mp_jacobi_all(A + 1, B + 1, n - 1, x)[n - 1]
                step = p / dp
                x -= step
                if abs(step) < mpmath.mpf(10) ** (-dps + 3):
                    break
            dp = (n + A + B + 1) / 2 * _mp_jacobi_all(A + 1, B + 1, n - 1, x)[n - 1]
            nodes.append(x)
            weights.append(c / ((1 - x * x) * dp * dp))
    return tuple(nodes), tuple(weights)


def _mp_discrete_projection(v: Callable, a: float, b: float, modes: int,
                            nodes, weights) -> list:
    """``sum_i w_i v(x_i) P_n(x_i) / gamma_n`` for ``n < modes``, as mpf."""
    A, B = mpmath.mpf(a), mpmath.mpf(b)
    acc = [mpmath.mpf(0)] * modes
    for x, w in zip(nodes, weights):
        fx = w * v(x)
        for n, p in enumerate(_mp_jacobi_all(A, B, modes - 1, x)):
            acc[n] += fx * p
    out = []
    for n in range(modes):
        norm = (2 ** (A + B + 1) / (2 * n + A + B + 1) * mpmath.gamma(n + A + 1)
                * mpmath.gamma(n + B + 1) / (mpmath.gamma(n + A + B + 1) * mpmath.factorial(n)))
        out.append(acc[n] / norm)
    return out


def mp_jacobi_projection(v: Callable, a: float, b: float, modes: int,
                         quad_nodes: int, dps: int = 40) -> np.ndarray:
    """Weighted projection coefficients of ``v`` onto ``P_0..P_{modes-1}``.

    Evaluated entirely at ``dps`` digits; ``v`` must accept mpf arguments.
    Avoids the round-off noise a double-precision projection leaves in
    coefficients that are far below machine epsilon.
    """
    nodes, weights = mp_gauss_jacobi(a, b, quad_nodes, dps)
    with mpmath.workdps(dps):
        return np.array([float(c) for c in _mp_discrete_projection(v, a, b, modes, nodes, weights)])


def mp_interpolation_defect(v: Callable, a: float, N: int, modes: int,
                            quad_nodes: int, dps: int = 40) -> np.ndarray:
    """Coefficients of ``v - I_N v`` in ``P_n^{a,a}``, ``n < modes``.

    ``I_N`` interpolates ``v`` at the ``N + 1`` Gauss-Jacobi(a, a) nodes; the
    reference is the ``modes``-term projection of ``v``.  Both coefficient sets
    and their difference are formed at ``dps`` digits, so the result keeps
    full relative accuracy even when the interpolation error is far below
    double-precision resolution of ``v`` itself.
    """
    if modes <= N:
        raise ValueError("need modes > N")
    qn, qw = mp_gauss_jacobi(a, a, quad_nodes, dps)
    inodes, iweights = mp_gauss_jacobi(a, a, N + 1, dps)
    with mpmath.workdps(dps):
        full = _mp_discrete_projection(v, a, a, modes, qn, qw)
        interp = _mp_discrete_projection(v, a, a, N + 1, inodes, iweights)
        return np.array([float(full[n] - (interp[n] if n <= N else 0)) for n in range(modes)])
