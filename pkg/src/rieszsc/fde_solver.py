"""Spectral solvers for ``R D^alpha u + u = f`` on (-1, 1), ``u(+-1) = 0``, 1 < alpha < 2.

Both solvers use the generalised Jacobi functions
``J_n = (1 - x^2)^{alpha/2} P_n^{alpha/2,alpha/2}`` as trial basis, whose Riesz
derivatives are ``d_n P_n^{alpha/2,alpha/2}`` with ``d_n = -Gamma(n+1+alpha)/n!``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import scipy.linalg

from .fracderiv import GjfExpansion, RieszOrder, as_order, gjf_eigenvalues, riesz_gjf
from .interp import gauss_modal_coeffs, gjf_nodes
from .orthopoly import JacobiParam, NodeSet, gauss_jacobi, jacobi_table
from .specialfn import DomainError

CONDITION_LIMIT = 1e12
RHS_MIN_NODES = 60


class SolverError(RuntimeError):
    """The discrete system could not be solved."""


def _check_order(order) -> RieszOrder:
    order = as_order(order)
    if not 1 < order.alpha < 2:
        raise DomainError(f"the model FDE solvers need 1 < alpha < 2, got {order.alpha}")
    return order


@dataclass(frozen=True)
class PetrovGalerkinSystem:
    order: RieszOrder
    N: int
    stiffness_diag: np.ndarray
    norms: np.ndarray
    mass: np.ndarray
    rhs: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        """``diag(d_j gamma_j) + M``."""
        return np.diag(self.stiffness_diag * self.norms) + self.mass


@dataclass(frozen=True)
class CollocationSystem:
    order: RieszOrder
    nodes: NodeSet
    D: np.ndarray
    Lambda: np.ndarray
    F: np.ndarray
    condition: float = field(default=np.nan)

    @property
    def matrix(self) -> np.ndarray:
        return self.D + np.diag(self.Lambda)


@dataclass(frozen=True)
class Solution:
    """A solver result: the GJF expansion of ``u_N`` plus diagnostics."""

    u: GjfExpansion
    method: str
    condition: float
    ill_conditioned: bool
    nodal_values: np.ndarray | None = None


@dataclass(frozen=True)
class SplitRhs:
    """``f(x) = regular(x) + (1 - x^2)^exponent * weighted(x)``.

    Keeps an endpoint-singular factor out of the sampled data so the
    Petrov-Galerkin load vector can fold it into the quadrature weight.
    """

    regular: Callable
    weighted: Callable
    exponent: float

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        w = np.clip(1 - x * x, 0.0, None) ** self.exponent
        return self.regular(x) + w * self.weighted(x)


def manufactured_rhs(u_true: GjfExpansion) -> SplitRhs:
    """``f = R D^alpha u_true + u_true`` for a GJF expansion ``u_true``."""
    return SplitRhs(u_true.riesz, u_true.smooth_part, u_true.order.alpha_star / 2)


def fractional_form_matrix(order, N: int) -> np.ndarray:
    """``(R D^alpha J_j, P_i)`` in the ``(alpha/2, alpha/2)`` weight, by quadrature.

    Assembled from the closed-form derivative and an (N+1)-point Gauss rule;
    diagonal up to round-off.
    """
    order = _check_order(order)
    a = order.alpha / 2
    p = JacobiParam(a, a)
    rule = gauss_jacobi(p, N + 1)
    P = jacobi_table(p, N, rule.points)
    RJ = np.array([riesz_gjf(order, j, rule.points) for j in range(N + 1)])
    return (P * rule.weights) @ RJ.T


def assemble_petrov_galerkin(order, f: Callable, N: int) -> PetrovGalerkinSystem:
    order = _check_order(order)
    a = order.alpha / 2
    p = JacobiParam(a, a)
    n = np.arange(N + 1)
    d = gjf_eigenvalues(order, N)
    norms = p.norm(n)
    # trial weight (1-x^2)^{a} merges with test weight: (P_j, P_i) in (alpha, alpha)
    mrule = gauss_jacobi(JacobiParam(order.alpha, order.alpha), N + 2)
    Pm = jacobi_table(p, N, mrule.points)
    mass = (Pm * mrule.weights) @ Pm.T
    mass = 0.5 * (mass + mass.T)
    nq = max(N + 2, RHS_MIN_NODES)
    if isinstance(f, SplitRhs):
        rhs = _load(p, N, f.regular, nq) + _load(JacobiParam(a + f.exponent, a + f.exponent),
                                                  N, f.weighted, nq, p)
    else:
        rhs = _load(p, N, f, nq)
    return PetrovGalerkinSystem(order, N, d, norms, mass, rhs)


def _load(weight: JacobiParam, N: int, g: Callable, nq: int, basis=None) -> np.ndarray:
    """``(g, P_i)`` in the ``weight`` inner product, ``i = 0..N``."""
    rule = gauss_jacobi(weight, nq)
    P = jacobi_table(basis or weight, N, rule.points)
    return (P * rule.weights) @ np.asarray(g(rule.points), dtype=float)


def _solve(A: np.ndarray, b: np.ndarray):
    try:
        lu = scipy.linalg.lu_factor(A, check_finite=True)
    except (ValueError, scipy.linalg.LinAlgError) as exc:
        raise SolverError(str(exc)) from exc
    if np.any(np.diag(lu[0]) == 0):
        raise SolverError("singular system")
    cond = float(np.linalg.cond(A))
    x = scipy.linalg.lu_solve(lu, b)
    ill = cond > CONDITION_LIMIT
    if ill:
        warnings.warn(f"condition number {cond:.2e} exceeds {CONDITION_LIMIT:.0e}")
    return x, cond, ill


def solve_petrov_galerkin(order, f: Callable, N: int) -> Solution:
    sysm = assemble_petrov_galerkin(order, f, N)
    c, cond, ill = _solve(sysm.matrix, sysm.rhs)
    return Solution(GjfExpansion(sysm.order, c), "pg", cond, ill)


def assemble_collocation(order, f: Callable, N: int) -> CollocationSystem:
    """``(D + Lambda) V = F`` with ``D[i, j] = R D^alpha lhat_j (x_i)``.

    ``D = R T``: ``T`` maps nodal values to Jacobi coefficients by discrete
    orthogonality and ``R[i, n] = d_n P_n(x_i)``.
    """
    order = _check_order(order)
    rule = gjf_nodes(order, N)
    x = rule.points
    P = jacobi_table(rule.param, N, x)
    T = (P * rule.weights) / rule.param.norm(np.arange(N + 1))[:, None]
    R = P.T * gjf_eigenvalues(order, N)
    D = R @ T
    Lam = (1 - x * x) ** (order.alpha / 2)
    F = np.asarray(f(x), dtype=float)
    return CollocationSystem(order, rule, D, Lam, F)


def solve_collocation(order, f: Callable, N: int) -> Solution:
    sysm = assemble_collocation(order, f, N)
    V, cond, ill = _solve(sysm.matrix, sysm.F)
    coeffs = gauss_modal_coeffs(V, sysm.nodes, sysm.nodes.param)
    return Solution(GjfExpansion(sysm.order, coeffs), "colloc", cond, ill, V)


SOLVERS = {"pg": solve_petrov_galerkin, "colloc": solve_collocation}
