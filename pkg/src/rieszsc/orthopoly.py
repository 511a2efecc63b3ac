"""Jacobi, Legendre and Gegenbauer polynomials, their roots and quadrature."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .specialfn import DomainError, gamma_ratio, ln_gamma, pochhammer_ratio


@dataclass(frozen=True)
class JacobiParam:
    """Exponents of the weight ``(1 - x)^a (1 + x)^b``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > -1 and self.b > -1):
            raise DomainError(f"Jacobi exponents must exceed -1: {self}")

    @property
    def symmetric(self) -> bool:
        return self.a == self.b

    def mass(self) -> float:
        """Integral of the weight over [-1, 1]."""
        a, b = self.a, self.b
        return math.exp(
            (a + b + 1) * math.log(2.0)
            + ln_gamma(a + 1)
            + ln_gamma(b + 1)
            - ln_gamma(a + b + 2)
        )

    def norm(self, n):
        """Squared weighted L2 norm of ``P_n^{a,b}``."""
        a, b = self.a, self.b
        n = np.atleast_1d(np.asarray(n, dtype=float))
        out = np.full(n.shape, self.mass())
        pos = n > 0
        if np.any(pos):
            m = n[pos]
            out[pos] = (
                2 ** (a + b + 1)
                / (2 * m + a + b + 1)
                * gamma_ratio(m + a + 1, m + 1)
                * gamma_ratio(m + b + 1, m + a + b + 1)
            )
        return out


def _as_param(p) -> JacobiParam:
    if isinstance(p, JacobiParam):
        return p
    a, b = p
    return JacobiParam(float(a), float(b))


LEGENDRE = JacobiParam(0.0, 0.0)


@dataclass(frozen=True)
class NodeSet:
    """Sorted points in [-1, 1], optionally with quadrature weights.

    ``kind`` is one of ``"Lobatto"``, ``"GaussJacobi"``, ``"SuperconvPoints"``.
    """

    points: np.ndarray
    kind: str
    weights: Optional[np.ndarray] = None
    param: Optional[JacobiParam] = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ModalExpansion:
    """Coefficients in a Legendre or Jacobi basis, index = degree."""

    coeffs: np.ndarray
    param: JacobiParam = LEGENDRE

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def basis(self) -> str:
        return "Legendre" if self.param == LEGENDRE else "Jacobi"

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        table = jacobi_table(self.param, self.degree, x)
        return np.tensordot(self.coeffs, table, axes=1)


def jacobi_table(p, nmax: int, x) -> np.ndarray:
    """Values ``P_n^{a,b}(x)`` for ``n = 0..nmax``, shape ``(nmax + 1,) + x.shape``.

    Works for complex ``x`` as well.
    """
    p = _as_param(p)
    a, b = p.a, p.b
    x = np.asarray(x)
    dtype = np.result_type(x, float)
    out = np.empty((nmax + 1,) + x.shape, dtype=dtype)
    out[0] = 1.0
    if nmax == 0:
        return out
    out[1] = (a + 1) + (a + b + 2) * (x - 1) / 2
    for n in range(2, nmax + 1):
        s = 2 * n + a + b
        c1 = 2 * n * (n + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (n + a - 1) * (n + b - 1) * s
        out[n] = (c2 * out[n - 1] - c3 * out[n - 2]) / c1
    return out


def jacobi_eval(p, n: int, x):
    """``P_n^{a,b}(x)`` by the three-term recurrence."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    p = _as_param(p)
    x = np.asarray(x)
    a, b = p.a, p.b
    p0 = np.ones_like(x, dtype=np.result_type(x, float))
    if n == 0:
        return p0 if p0.ndim else p0[()]
    p1 = (a + 1) + (a + b + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c1 = 2 * k * (k + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (k + a - 1) * (k + b - 1) * s
        p0, p1 = p1, (c2 * p1 - c3 * p0) / c1
    return p1


def jacobi_deriv_eval(p, n: int, x, m: int = 1):
    """m-th derivative of ``P_n^{a,b}``.

    Uses ``d/dx P_n^{a,b} = (n + a + b + 1)/2 P_{n-1}^{a+1,b+1}`` repeatedly.
    """
    p = _as_param(p)
    if m == 0:
        return jacobi_eval(p, n, x)
    if n < m:
        return np.zeros_like(np.asarray(x, dtype=float))
    s = n + p.a + p.b + 1
    scale = gamma_ratio(s + m, s) / 2**m
    return scale * jacobi_eval(JacobiParam(p.a + m, p.b + m), n - m, x)


def gegenbauer_scale(lam: float, n: int) -> float:
    """``(2 lam)_n / (lam + 1/2)_n``, the factor taking Jacobi to Gegenbauer."""
    if not lam > -0.5:
        raise DomainError(f"Gegenbauer parameter must exceed -1/2, got {lam}")
    return pochhammer_ratio(2 * lam, lam + 0.5, n)


def gegenbauer_eval(lam: float, n: int, x):
    """``C_n^{(lam)}(x) = (2 lam)_n / (lam + 1/2)_n P_n^{(lam-1/2, lam-1/2)}(x)``."""
    if not lam > -0.5:
        raise DomainError(f"Gegenbauer parameter must exceed -1/2, got {lam}")
    if lam == 0:
        raise DomainError("lambda = 0 is excluded (scaling degenerates)")
    c = gegenbauer_scale(lam, n)
    return c * jacobi_eval(JacobiParam(lam - 0.5, lam - 0.5), n, x)


def _recurrence_matrix(p: JacobiParam, n: int):
    """Diagonal and off-diagonal of the symmetric Jacobi matrix."""
    a, b = p.a, p.b
    k = np.arange(n, dtype=float)
    s = 2 * k + a + b
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (b * b - a * a) / (s * (s + 2))
    diag[0] = (b - a) / (a + b + 2)
    k = np.arange(1, n, dtype=float)
    s = 2 * k + a + b
    with np.errstate(divide="ignore", invalid="ignore"):
        off = np.sqrt(
            4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1))
        )
    if n > 1 and a + b + 1 == 0:
        # s - 1 = 0 at k = 1; take the limit
        off[0] = np.sqrt(4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b)))
    return diag, off


def jacobi_roots(p, n: int, newton_steps: int = 5) -> NodeSet:
    """Zeros of ``P_n^{a,b}``: Golub-Welsch eigenvalues polished by Newton."""
    if n < 1:
        raise DomainError("need n >= 1")
    p = _as_param(p)
    diag, off = _recurrence_matrix(p, n)
    x = eigh_tridiagonal(diag, off, eigvals_only=True)
    x = np.sort(x)
    dp = JacobiParam(p.a + 1, p.b + 1)
    for _ in range(newton_steps):
        f = jacobi_eval(p, n, x)
        df = 0.5 * (n + p.a + p.b + 1) * jacobi_eval(dp, n - 1, x)
        step = f / df
        x = x - step
        if np.max(np.abs(step)) < 1e-16:
            break
    if p.symmetric:
        x = 0.5 * (x - x[::-1])
        if n % 2:
            x[n // 2] = 0.0
    return NodeSet(points=x, kind="GaussJacobi", param=p)


def gauss_jacobi(p, n: int) -> NodeSet:
    """n-point Gauss-Jacobi rule, exact for degree ``2n - 1``."""
    p = _as_param(p)
    nodes = jacobi_roots(p, n)
    x = nodes.points
    a, b = p.a, p.b
    dp = 0.5 * (n + a + b + 1) * jacobi_eval(JacobiParam(a + 1, b + 1), n - 1, x)
    # w_i = 2^{a+b+1} G(n+a+1) G(n+b+1) / (G(n+a+b+1) n!) / ((1 - x_i^2) P_n'(x_i)^2)
    c = (
        2 ** (a + b + 1)
        * gamma_ratio(n + a + 1, n + 1)
        * gamma_ratio(n + b + 1, n + a + b + 1)
    )
    w = c / ((1 - x * x) * dp * dp)
    if p.symmetric:
        w = 0.5 * (w + w[::-1])
    return NodeSet(points=x, kind="GaussJacobi", weights=w, param=p)


def lobatto_nodes(N: int) -> NodeSet:
    """Legendre-Lobatto points: +-1 and the zeros of ``L_N'``.

    Weights are the Gauss-Lobatto-Legendre weights ``2 / (N (N + 1) L_N(x)^2)``.
    """
    if N < 2:
        raise DomainError("Lobatto nodes need N >= 2")
    inner = jacobi_roots(JacobiParam(1.0, 1.0), N - 1).points
    x = np.concatenate(([-1.0], inner, [1.0]))
    LN = jacobi_eval(LEGENDRE, N, x)
    w = 2.0 / (N * (N + 1) * LN * LN)
    w = 0.5 * (w + w[::-1])
    return NodeSet(points=x, kind="Lobatto", weights=w, param=LEGENDRE)
