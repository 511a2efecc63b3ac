"""Legendre-Lobatto and GJF fractional interpolation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .fracderiv import (
    EndpointSingularityError,
    GjfExpansion,
    RieszOrder,
    as_order,
    riesz_legendre_series,
)
from .orthopoly import (
    LEGENDRE,
    JacobiParam,
    ModalExpansion,
    NodeSet,
    gauss_jacobi,
    jacobi_table,
    lobatto_nodes,
)

DEFAULT_GRID_SIZE = 2001
GRID_OFFSET = 1e-6


class InputError(ValueError):
    """Sampled function values are unusable (non-finite)."""


@dataclass(frozen=True)
class Interpolant:
    """An interpolant together with the nodes it was built on.

    ``flavor`` is ``"LobattoPoly"`` (``modal`` is a Legendre
    :class:`ModalExpansion`) or ``"GjfFractional"`` (``modal`` is a
    :class:`GjfExpansion`).
    """

    flavor: str
    nodes: NodeSet
    modal: Union[ModalExpansion, GjfExpansion]
    order: Optional[RieszOrder] = None

    def __call__(self, x):
        return self.modal(x)

    def riesz(self, x, order=None):
        """Riesz derivative of the interpolant."""
        if self.flavor == "GjfFractional":
            return self.modal.riesz(x)
        order = as_order(order if order is not None else self.order)
        return riesz_legendre_series(order, self.modal.coeffs, x)


def _sample(f: Callable, x: np.ndarray) -> np.ndarray:
    y = np.asarray(f(x), dtype=float)
    if y.shape != x.shape:
        y = np.broadcast_to(y, x.shape).astype(float)
    if not np.all(np.isfinite(y)):
        raise InputError("function is not finite at every node")
    return y


def lobatto_modal_coeffs(values: np.ndarray, nodes: NodeSet) -> np.ndarray:
    """Legendre coefficients of the degree-N interpolant through Lobatto data.

    Discrete orthogonality under the Gauss-Lobatto-Legendre rule; the top
    mode uses the discrete norm ``2 / N`` instead of ``2 / (2N + 1)``.
    """
    N = len(nodes) - 1
    table = jacobi_table(LEGENDRE, N, nodes.points)
    norms = 2.0 / (2 * np.arange(N + 1) + 1.0)
    norms[N] = 2.0 / N
    return (table * nodes.weights) @ values / norms


def lobatto_interpolate(f: Callable, N: int, order=None) -> Interpolant:
    nodes = lobatto_nodes(N)
    vals = _sample(f, nodes.points)
    coeffs = lobatto_modal_coeffs(vals, nodes)
    return Interpolant(
        "LobattoPoly",
        nodes,
        ModalExpansion(coeffs, LEGENDRE),
        None if order is None else as_order(order),
    )


def gauss_modal_coeffs(values: np.ndarray, rule: NodeSet, param: JacobiParam) -> np.ndarray:
    """Jacobi coefficients of the interpolant through data at Gauss nodes.

    ``c_n = sum_i w_i v_i P_n(x_i) / gamma_n``; exact because ``v_N P_n``
    has degree at most ``2N`` and the rule is exact to ``2N + 1``.
    """
    N = len(rule) - 1
    table = jacobi_table(param, N, rule.points)
    return (table * rule.weights) @ values / param.norm(np.arange(N + 1))


def gjf_nodes(order, N: int) -> NodeSet:
    """Zeros of ``P_{N+1}^{a/2,a/2}`` with ``a = alpha*``, plus Gauss weights."""
    order = as_order(order)
    a = order.alpha_star / 2
    return gauss_jacobi(JacobiParam(a, a), N + 1)


def gjf_interpolate(f: Callable, order, N: int) -> Interpolant:
    """GJF fractional interpolant ``(1 - x^2)^{a/2} v_N`` with ``a = alpha*``."""
    if N < 1:
        raise ValueError("need N >= 1")
    order = as_order(order)
    rule = gjf_nodes(order, N)
    x = rule.points
    u = _sample(f, x)
    v = u * (1 - x * x) ** (-order.alpha_star / 2)
    coeffs = gauss_modal_coeffs(v, rule, rule.param)
    return Interpolant("GjfFractional", rule, GjfExpansion(order, coeffs), order)


def default_grid(size: int = DEFAULT_GRID_SIZE) -> np.ndarray:
    return np.linspace(-1 + GRID_OFFSET, 1 - GRID_OFFSET, size)


def riesz_error_curve(interp: Interpolant, truth: Callable, grid=None, order=None):
    """Pointwise ``R D^alpha u - R D^alpha u_N`` on ``grid``.

    ``grid`` may be a point array, a :class:`NodeSet` or an integer count
    (equispaced on ``[-1 + 1e-6, 1 - 1e-6]``).  Returns ``(x, error)``.
    """
    if grid is None:
        x = default_grid()
    elif isinstance(grid, NodeSet):
        x = np.asarray(grid.points, dtype=float)
    elif np.ndim(grid) == 0:
        x = default_grid(int(grid))
    else:
        x = np.asarray(grid, dtype=float)
    if interp.flavor == "LobattoPoly" and np.any(np.abs(x) >= 1):
        raise EndpointSingularityError("Lobatto error curve is singular term-wise at +-1")
    err = np.asarray(truth(x), dtype=float) - interp.riesz(x, order)
    return x, err


def gjf_projection(v: Callable, order, M: int = 40, quad_nodes: Optional[int] = None,
                   dps: Optional[int] = None) -> GjfExpansion:
    """Weighted L2 projection of ``v`` onto ``P_0..P_{M-1}`` in the GJF weight.

    Represents ``u = (1 - x^2)^{a/2} v`` (``a = alpha*``) by ``M`` modes; used
    to build reference Riesz derivatives of non-polynomial test functions.
    With ``dps`` set the projection runs in mpmath at that many digits and
    ``v`` must accept mpf arguments.
    """
    order = as_order(order)
    a = order.alpha_star / 2
    param = JacobiParam(a, a)
    nq = quad_nodes or max(2 * M, 80)
    if dps is not None:
        from .oracle import mp_jacobi_projection

        return GjfExpansion(order, mp_jacobi_projection(v, a, a, M, nq, dps))
    rule = gauss_jacobi(param, nq)
    table = jacobi_table(param, M - 1, rule.points)
    vals = np.asarray(v(rule.points), dtype=float)
    coeffs = (table * rule.weights) @ vals / param.norm(np.arange(M))
    return GjfExpansion(order, coeffs)


def gjf_error_expansion(v: Callable, order, N: int, M: int = 40,
                        quad_nodes: Optional[int] = None, dps: int = 34) -> GjfExpansion:
    """``u - u_N`` for the GJF interpolant, as a GJF expansion built at ``dps`` digits.

    ``v`` is the smooth factor relative to ``(1 - x^2)^{a/2}``, ``a = alpha*``,
    and must accept mpf arguments.  The difference is taken before rounding to
    double, so ``riesz`` of the result resolves errors well below 1e-16.
    """
    from .oracle import mp_interpolation_defect

    order = as_order(order)
    a = order.alpha_star / 2
    d = mp_interpolation_defect(v, a, N, M, quad_nodes or max(2 * M, 80), dps)
    return GjfExpansion(order, d)
