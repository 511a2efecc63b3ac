"""Built-in test functions and their reference Riesz derivatives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .fracderiv import GjfExpansion, as_order
from .interp import gjf_projection
from .oracle import power_series_terms, riesz_power_oracle

TRUTH_MODES = 40
TRUTH_DPS = 34


@dataclass(frozen=True)
class Problem:
    """A test function ``u`` and a callable for its exact Riesz derivative.

    GJF-type problems also carry ``smooth``, the factor ``v`` with
    ``u = (1 - x^2)^{a/2} v`` (``a = alpha*``), which accepts mpf arguments,
    and ``expansion``, the truncated GJF expansion behind ``truth``.
    """

    name: str
    u: Callable
    truth: Callable
    smooth: Optional[Callable] = None
    expansion: Optional[GjfExpansion] = None


def _memoized(fn: Callable, size: int = 8) -> Callable:
    """Cache an expensive array function by the bytes of its argument."""
    cache: dict = {}

    def wrapped(x):
        xa = np.asarray(x, dtype=float)
        key = (xa.shape, xa.tobytes())
        if key not in cache:
            if len(cache) >= size:
                cache.pop(next(iter(cache)))
            cache[key] = np.asarray(fn(xa))
        out = cache[key].copy()
        return out if np.ndim(x) else float(out)

    return wrapped


def poly9(order) -> Problem:
    """``(1 + x)^9 (1 - x)^9``; derivative from the power rule."""
    order = as_order(order)
    left, right = power_series_terms(9, 9)

    def u(x):
        x = np.asarray(x, dtype=float)
        return (1 + x) ** 9 * (1 - x) ** 9

    return Problem("poly9", u, _memoized(lambda x: riesz_power_oracle(order, left, right, x)))


def _gjf_problem(name: str, v: Callable, order, modes: int) -> Problem:
    order = as_order(order)
    a, astar = order.alpha, order.alpha_star

    def u(x):
        x = np.asarray(x, dtype=float)
        return np.clip(1 - x * x, 0, None) ** (a / 2) * v(x)

    def smooth(x):
        # v relative to the reduced weight (1 - x^2)^{alpha*/2}
        return (1 - x * x) ** ((a - astar) / 2) * v(x)

    expansion = gjf_projection(smooth, order, modes, dps=TRUTH_DPS)
    return Problem(name, u, expansion.riesz, smooth, expansion)


def runge_shift(order, modes: int = TRUTH_MODES) -> Problem:
    """``(1 - x^2)^{alpha/2} / (1 + (x + 3)^2)``."""
    return _gjf_problem("runge-shift", lambda x: 1.0 / (1.0 + (x + 3.0) ** 2), order, modes)


def fde_true(order, modes: int = TRUTH_MODES) -> Problem:
    """``(1 - x^2)^{alpha/2} / (1 + x^2 / 2)``, the model-FDE solution."""
    return _gjf_problem("fde-true", lambda x: 1.0 / (1.0 + 0.5 * x * x), order, modes)


PROBLEMS = {"poly9": poly9, "runge-shift": runge_shift, "fde-true": fde_true}


def gjf_mode(order, n: int) -> Problem:
    """A single GJF ``(1 - x^2)^{a/2} P_n^{a/2,a/2}``; exactly representable."""
    order = as_order(order)
    c = np.zeros(max(n + 1, 1))
    c[n] = 1.0
    expansion = GjfExpansion(order, c)
    return Problem(f"mode:{n}", expansion, expansion.riesz, None, expansion)


def get_problem(name: str, order) -> Problem:
    """Look up a built-in problem; ``mode:<n>`` selects a single GJF mode."""
    if name.startswith("mode:"):
        try:
            n = int(name[5:])
        except ValueError:
            raise KeyError(f"bad mode spec {name!r}") from None
        if n < 0:
            raise KeyError(f"bad mode spec {name!r}")
        return gjf_mode(order, n)
    try:
        factory = PROBLEMS[name]
    except KeyError:
        raise KeyError(f"unknown function {name!r}; choose from {sorted(PROBLEMS)}") from None
    return factory(order)
