"""Closed-form Riesz and Riemann-Liouville derivatives of the spectral bases.

Conventions
-----------
For ``alpha`` in ``(k - 1, k)`` the Riesz derivative is

    R D^alpha u = c * (D^k I_left^{k-alpha} u + (-1)^k D^k I_right^{k-alpha} u)

with ``c = 1 / (2 sin(pi g / 2))`` for odd ``k`` and ``c = 1 / (2 cos(pi g / 2))``
for even ``k``, where ``g = k - alpha``.  The second term is the usual right
Riemann-Liouville derivative, so for ``0 < alpha < 1`` the constant is
``1 / (2 cos(pi alpha / 2))`` and the operator equals ``+(-Delta)^{alpha/2}``.
Under this convention ``R D^alpha (1 - x^2)^{alpha/2} = C(k) Gamma(alpha + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .orthopoly import JacobiParam, jacobi_deriv_eval, jacobi_table
from .specialfn import DomainError, gamma_ratio


class EndpointSingularityError(DomainError):
    """Evaluation requested at an endpoint where the derivative is infinite."""


@dataclass(frozen=True)
class RieszOrder:
    """Order ``alpha > 0`` (non-integer) of a Riesz derivative."""

    alpha: float

    def __post_init__(self) -> None:
        a = self.alpha
        if not (a > 0) or float(a).is_integer():
            raise DomainError(f"Riesz order must be positive and non-integer, got {a}")

    @property
    def k(self) -> int:
        return math.ceil(self.alpha)

    @property
    def parity(self) -> str:
        return "odd-k" if self.k % 2 else "even-k"

    @property
    def alpha_star(self) -> float:
        """Reduced order in (0, 2) obtained by removing an even integer."""
        a, k = self.alpha, self.k
        if a < 2:
            return a
        return a - k + 1 if k % 2 else a - k + 2

    @property
    def c_scale(self) -> float:
        g = self.k - self.alpha
        if self.k % 2:
            return 1.0 / (2.0 * math.sin(math.pi * g / 2))
        return 1.0 / (2.0 * math.cos(math.pi * g / 2))

    @property
    def sign(self) -> int:
        """``C(k)``: +1, -1, -1, +1, ... for k = 1, 2, 3, 4, ..."""
        k = self.k
        return (-1) ** ((k - 1) // 2) if k % 2 else (-1) ** (k // 2)

    @cached_property
    def reduced(self) -> "RieszOrder":
        return self if self.alpha < 2 else RieszOrder(self.alpha_star)


def as_order(order) -> RieszOrder:
    return order if isinstance(order, RieszOrder) else RieszOrder(float(order))


def _check_mu(mu: float) -> None:
    if not 0 < mu < 1:
        raise DomainError(f"need 0 < mu < 1, got {mu}")


def rl_left_legendre(mu: float, n: int, x):
    """Left Riemann-Liouville derivative of ``L_n`` of order ``mu`` in (0, 1).

    ``Gamma(n+1)/Gamma(n-mu+1) (1+x)^{-mu} P_n^{mu,-mu}(x)``.
    """
    _check_mu(mu)
    x = np.asarray(x, dtype=float)
    if np.any(x <= -1):
        raise EndpointSingularityError("left RL derivative is infinite at x = -1")
    p = jacobi_table(JacobiParam(mu, -mu), n, x)[n]
    return gamma_ratio(n + 1, n + 1 - mu) * (1 + x) ** (-mu) * p


def rl_right_legendre(mu: float, n: int, x):
    """Right Riemann-Liouville derivative of ``L_n`` of order ``mu`` in (0, 1)."""
    _check_mu(mu)
    x = np.asarray(x, dtype=float)
    if np.any(x >= 1):
        raise EndpointSingularityError("right RL derivative is infinite at x = 1")
    p = jacobi_table(JacobiParam(-mu, mu), n, x)[n]
    return gamma_ratio(n + 1, n + 1 - mu) * (1 - x) ** (-mu) * p


def riesz_legendre_series(order, coeffs, x):
    """Riesz derivative of ``sum_n coeffs[n] L_n`` for ``0 < alpha < 1``.

    Singular at +-1 term by term; raises there.
    """
    order = as_order(order)
    mu = order.alpha
    _check_mu(mu)
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= 1):
        raise EndpointSingularityError("Legendre-series Riesz derivative needs |x| < 1")
    coeffs = np.asarray(coeffs, dtype=float)
    N = len(coeffs) - 1
    n = np.arange(N + 1)
    g = coeffs * gamma_ratio(n + 1.0, n + 1.0 - mu)
    left = np.tensordot(g, jacobi_table(JacobiParam(mu, -mu), N, x), axes=1)
    right = np.tensordot(g, jacobi_table(JacobiParam(-mu, mu), N, x), axes=1)
    return order.c_scale * ((1 + x) ** (-mu) * left + (1 - x) ** (-mu) * right)


def riesz_lobatto_poly(order, N: int, x):
    """Riesz derivative of the Legendre-Lobatto polynomial ``L_{N-1} - L_{N+1}``.

    The polynomial vanishes at +-1, so each one-sided term tends to zero at its
    own singular endpoint; those limits are used at ``x = +-1``.
    """
    order = as_order(order)
    mu = order.alpha
    if not 0 < mu < 1:
        raise DomainError(f"riesz_lobatto_poly needs 0 < alpha < 1, got {mu}")
    if N < 2:
        raise DomainError("need N >= 2")
    x = np.asarray(x, dtype=float)
    ga = gamma_ratio(N, N - mu)
    gb = gamma_ratio(N + 2, N + 2 - mu)
    tl = jacobi_table(JacobiParam(mu, -mu), N + 1, x)
    tr = jacobi_table(JacobiParam(-mu, mu), N + 1, x)
    bl = ga * tl[N - 1] - gb * tl[N + 1]
    br = ga * tr[N - 1] - gb * tr[N + 1]
    with np.errstate(divide="ignore", invalid="ignore"):
        left = np.where(x <= -1, 0.0, (1 + x) ** (-mu) * bl)
        right = np.where(x >= 1, 0.0, (1 - x) ** (-mu) * br)
    out = order.c_scale * (left + right)
    return float(out) if out.ndim == 0 else out


def gjf_eigenvalues(order, nmax: int) -> np.ndarray:
    """``C(k) Gamma(n + alpha + 1) / n!`` for ``n = 0..nmax`` (order < 2)."""
    order = as_order(order)
    n = np.arange(nmax + 1, dtype=float)
    return order.sign * gamma_ratio(n + order.alpha + 1, n + 1)


def riesz_gjf(order, n: int, x):
    """Riesz derivative of the GJF ``(1 - x^2)^{a/2} P_n^{a/2,a/2}``, ``a = alpha*``.

    For ``alpha < 2`` this is ``C(k) Gamma(n+alpha+1)/n! P_n^{alpha/2,alpha/2}``.
    For ``alpha > 2`` the image of the reduced order is differentiated
    ``alpha - alpha*`` more times.
    """
    order = as_order(order)
    r = order.reduced
    lam = gjf_eigenvalues(r, n)[n]
    p = JacobiParam(r.alpha / 2, r.alpha / 2)
    m = int(round(order.alpha - r.alpha))
    return lam * jacobi_deriv_eval(p, n, x, m)


@dataclass(frozen=True)
class GjfExpansion:
    """``u(x) = (1 - x^2)^{a/2} sum_n c_n P_n^{a/2,a/2}(x)`` with ``a = alpha*``."""

    order: RieszOrder
    coeffs: np.ndarray

    @property
    def param(self) -> JacobiParam:
        a = self.order.alpha_star / 2
        return JacobiParam(a, a)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def smooth_part(self, x):
        x = np.asarray(x, dtype=float)
        return np.tensordot(self.coeffs, jacobi_table(self.param, self.degree, x), axes=1)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        w = np.clip(1 - x * x, 0.0, None) ** (self.order.alpha_star / 2)
        return w * self.smooth_part(x)

    def riesz(self, x):
        return riesz_of_gjf_expansion(self, x)

    def __add__(self, other: "GjfExpansion") -> "GjfExpansion":
        if other.order != self.order:
            raise ValueError("orders differ")
        n = max(len(self.coeffs), len(other.coeffs))
        c = np.zeros(n)
        c[: len(self.coeffs)] += self.coeffs
        c[: len(other.coeffs)] += other.coeffs
        return GjfExpansion(self.order, c)

    def scaled(self, s: float) -> "GjfExpansion":
        return GjfExpansion(self.order, s * np.asarray(self.coeffs))


def riesz_of_gjf_expansion(u: GjfExpansion, x):
    order = u.order
    x = np.asarray(x, dtype=float)
    coeffs = np.asarray(u.coeffs, dtype=float)
    N = len(coeffs) - 1
    r = order.reduced
    lam = gjf_eigenvalues(r, N)
    m = int(round(order.alpha - r.alpha))
    if m == 0:
        table = jacobi_table(u.param, N, x)
        return np.tensordot(coeffs * lam, table, axes=1)
    out = np.zeros_like(x)
    for n in range(m, N + 1):
        out = out + coeffs[n] * lam[n] * jacobi_deriv_eval(u.param, n, x, m)
    return out
