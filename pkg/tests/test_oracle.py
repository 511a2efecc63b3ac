from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from rieszsc.fracderiv import RieszOrder, riesz_gjf, riesz_lobatto_poly
from rieszsc.oracle import (
    legendre_power_terms,
    mp_gauss_jacobi,
    mp_interpolation_defect,
    mp_jacobi_projection,
    power_series_terms,
    riesz_power_oracle,
    riesz_quadrature_oracle,
)
from rieszsc.orthopoly import LEGENDRE, gauss_jacobi, jacobi_eval
from rieszsc.specialfn import DomainError

X = np.linspace(-0.9, 0.9, 50)


def test_power_oracle_constant():
    alpha = 0.35
    o = RieszOrder(alpha)
    got = riesz_power_oracle(o, [(0, 1)], [(0, 1)], X)
    expected = o.c_scale * ((1 + X) ** -alpha + (1 - X) ** -alpha) / math.gamma(1 - alpha)
    np.testing.assert_allclose(got, expected, rtol=1e-14)


@pytest.mark.parametrize("alpha", [0.4, 1.3, 1.7])
def test_power_oracle_weight_function(alpha):
    left, right = power_series_terms(alpha / 2, alpha / 2)
    got = riesz_power_oracle(alpha, left, right, X)
    np.testing.assert_allclose(got, riesz_gjf(alpha, 0, X), rtol=1e-8)


def test_power_oracle_rejects_bad_exponent():
    with pytest.raises(DomainError):
        riesz_power_oracle(0.5, [(-0.6, 1.0)], [], 0.0)


def test_power_series_terms_exact_polynomial():
    left, right = power_series_terms(9, 9)
    assert all(isinstance(c, Fraction) for _, c in left)
    x = 0.37
    direct = (1 + x) ** 9 * (1 - x) ** 9
    assert float(sum(c * Fraction(1 + x) ** int(p) for p, c in left)) == pytest.approx(direct, rel=1e-14)
    assert float(sum(c * Fraction(1 - x) ** int(p) for p, c in right)) == pytest.approx(direct, rel=1e-14)


def test_legendre_power_terms_reproduce_polynomial():
    coeffs = [Fraction(1, 3), 0, -2, 5, Fraction(7, 2)]
    left, right = legendre_power_terms(coeffs)
    x = Fraction(-2, 7)
    direct = sum(float(c) * jacobi_eval(LEGENDRE, n, float(x)) for n, c in enumerate(coeffs))
    assert float(sum(c * (1 + x) ** int(p) for p, c in left)) == pytest.approx(direct, rel=1e-14)
    assert float(sum(c * (1 - x) ** int(p) for p, c in right)) == pytest.approx(direct, rel=1e-14)


def test_two_oracles_agree():
    N = 7
    coeffs = [0] * (N + 2)
    coeffs[N - 1], coeffs[N + 1] = 1, -1
    left, right = legendre_power_terms(coeffs)
    p = riesz_power_oracle(0.6, left, right, X)
    q = riesz_quadrature_oracle(
        0.6, lambda t: jacobi_eval(LEGENDRE, N - 1, t) - jacobi_eval(LEGENDRE, N + 1, t), X)
    np.testing.assert_allclose(p, q, rtol=1e-9, atol=1e-9 * np.abs(p).max())
    np.testing.assert_allclose(p, riesz_lobatto_poly(0.6, N, X), rtol=1e-12, atol=1e-12)


def test_quadrature_oracle_needs_interior():
    with pytest.raises(DomainError):
        riesz_quadrature_oracle(0.5, lambda t: 1 + 0 * t, np.array([1.0]))


def test_mp_gauss_jacobi_matches_double():
    nodes, weights = mp_gauss_jacobi(0.3, 0.3, 12, 30)
    g = gauss_jacobi((0.3, 0.3), 12)
    np.testing.assert_allclose([float(v) for v in nodes], g.points, atol=1e-15)
    np.testing.assert_allclose([float(v) for v in weights], g.weights, rtol=1e-13)


def test_mp_projection_of_polynomial():
    a = 0.35
    c = mp_jacobi_projection(lambda x: 2 * x**3 - x + 0.5, a, a, 6, 20, 30)
    x = np.linspace(-1, 1, 9)
    rebuilt = sum(cn * jacobi_eval((a, a), n, x) for n, cn in enumerate(c))
    np.testing.assert_allclose(rebuilt, 2 * x**3 - x + 0.5, atol=1e-15)
    assert np.all(np.abs(c[4:]) < 1e-30)


def test_mp_defect_vanishes_for_polynomials():
    d = mp_interpolation_defect(lambda x: x**4 - 3 * x, 0.2, 5, 10, 20, 30)
    assert np.max(np.abs(d)) < 1e-28
    with pytest.raises(ValueError):
        mp_interpolation_defect(lambda x: x, 0.2, 5, 5, 20, 30)
