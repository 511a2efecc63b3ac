from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import eval_jacobi

from rieszsc.orthopoly import (
    LEGENDRE,
    JacobiParam,
    ModalExpansion,
    gauss_jacobi,
    gegenbauer_eval,
    gegenbauer_scale,
    jacobi_deriv_eval,
    jacobi_eval,
    jacobi_roots,
    jacobi_table,
    lobatto_nodes,
)
from rieszsc.specialfn import DomainError, gamma_ratio

exponents = st.floats(-0.95, 4.0)
degrees = st.integers(0, 40)
points = st.floats(-1.0, 1.0)


def test_param_validation():
    with pytest.raises(DomainError):
        JacobiParam(-1.0, 0.0)
    with pytest.raises(DomainError):
        JacobiParam(0.0, -1.5)


def test_jacobi_eval_examples():
    assert jacobi_eval((0.3, 1.2), 0, 0.7) == 1.0
    assert jacobi_eval(LEGENDRE, 3, 0.5) == pytest.approx(-0.4375, abs=1e-15)
    alpha, N = 1.3, 9
    p = JacobiParam(alpha / 2, alpha / 2)
    expected = math.exp(math.lgamma(N + 2 + alpha / 2) - math.lgamma(N + 2) - math.lgamma(alpha / 2 + 1))
    assert jacobi_eval(p, N + 1, 1.0) == pytest.approx(expected, rel=1e-13)


@given(exponents, exponents, degrees, points)
def test_jacobi_eval_matches_scipy(a, b, n, x):
    ref = eval_jacobi(n, a, b, x)
    got = jacobi_eval((a, b), n, x)
    scale = max(1.0, abs(jacobi_eval((a, b), n, 1.0)), abs(jacobi_eval((a, b), n, -1.0)))
    assert abs(got - ref) <= 1e-11 * scale


@given(exponents, degrees, points)
def test_symmetry(a, n, x):
    p = JacobiParam(a, a)
    assert jacobi_eval(p, n, -x) == pytest.approx((-1) ** n * jacobi_eval(p, n, x), rel=1e-12, abs=1e-12)


def test_table_matches_single_evaluations():
    p = JacobiParam(0.35, -0.4)
    x = np.linspace(-1, 1, 17)
    t = jacobi_table(p, 12, x)
    for n in range(13):
        np.testing.assert_allclose(t[n], jacobi_eval(p, n, x), rtol=1e-14, atol=1e-14)


def test_endpoint_identity():
    for a, b in [(0.2, 0.7), (1.5, 0.0), (-0.5, -0.5)]:
        for n in (1, 5, 20):
            expected = gamma_ratio(n + a + 1, n + 1) / math.gamma(a + 1)
            assert jacobi_eval((a, b), n, 1.0) == pytest.approx(expected, rel=1e-12)


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(1, 25), st.floats(-0.95, 0.95))
def test_derivative_against_central_difference(a, b, n, x):
    h = 1e-6
    fd = (jacobi_eval((a, b), n, x + h) - jacobi_eval((a, b), n, x - h)) / (2 * h)
    d = jacobi_deriv_eval((a, b), n, x)
    scale = max(1.0, abs(jacobi_deriv_eval((a, b), n, 1.0)), abs(jacobi_deriv_eval((a, b), n, -1.0)))
    assert abs(fd - d) <= 1e-6 * scale


def test_second_derivative_matches_scipy_identity():
    a, b, n, x = 0.4, 0.4, 7, np.linspace(-0.9, 0.9, 11)
    # d2/dx2 P_n = (n+a+b+1)(n+a+b+2)/4 P_{n-2}^{a+2,b+2}
    ref = (n + a + b + 1) * (n + a + b + 2) / 4 * eval_jacobi(n - 2, a + 2, b + 2, x)
    np.testing.assert_allclose(jacobi_deriv_eval((a, b), n, x, 2), ref, rtol=1e-12, atol=1e-12)
    assert np.all(jacobi_deriv_eval((a, b), 1, x, 2) == 0)


def test_gegenbauer_examples():
    x = np.linspace(-1, 1, 9)
    np.testing.assert_allclose(gegenbauer_eval(1.0, 2, x), 4 * x * x - 1, atol=1e-14)
    assert gegenbauer_eval(0.8, 0, 0.3) == pytest.approx(1.0)
    alpha, N = 0.7, 12
    lam = (alpha + 1) / 2
    expected = math.exp(math.lgamma(N + 2 + alpha) - math.lgamma(N + 2) - math.lgamma(alpha + 1))
    assert gegenbauer_eval(lam, N + 1, 1.0) == pytest.approx(expected, rel=1e-12)


def test_gegenbauer_domain():
    with pytest.raises(DomainError):
        gegenbauer_eval(-0.5, 3, 0.1)
    with pytest.raises(DomainError):
        gegenbauer_eval(0.0, 3, 0.1)


@given(st.floats(0.05, 3.0), st.integers(1, 20), st.floats(-0.9, 0.9))
def test_gegenbauer_derivative_identity(lam, n, x):
    h = 1e-6
    fd = (gegenbauer_eval(lam, n, x + h) - gegenbauer_eval(lam, n, x - h)) / (2 * h)
    rhs = 2 * lam * gegenbauer_eval(lam + 1, n - 1, x)
    scale = max(1.0, abs(2 * lam * gegenbauer_eval(lam + 1, n - 1, 1.0)))
    assert abs(fd - rhs) <= 1e-5 * scale


@pytest.mark.parametrize("alpha", [0.2, 0.9, 1.5])
def test_gegenbauer_scaling_growth(alpha):
    ns = np.arange(16, 129)
    c = [gegenbauer_scale((alpha + 1) / 2, n + 1) for n in ns]
    slope = np.polyfit(np.log(ns), np.log(c), 1)[0]
    assert alpha / 2 - 0.1 <= slope <= alpha / 2 + 0.1


def test_roots_examples():
    assert jacobi_roots((0.7, 0.7), 1).points.tolist() == [0.0]
    alpha = 1.2
    r = jacobi_roots((alpha / 2, alpha / 2), 2).points
    np.testing.assert_allclose(r, [-1 / math.sqrt(3 + alpha), 1 / math.sqrt(3 + alpha)], atol=1e-15)
    r = jacobi_roots(LEGENDRE, 3).points
    np.testing.assert_allclose(r, [-math.sqrt(0.6), 0, math.sqrt(0.6)], atol=1e-15)
    with pytest.raises(DomainError):
        jacobi_roots(LEGENDRE, 0)


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(1, 60))
def test_roots_residual_sorted_interior(a, b, n):
    r = jacobi_roots((a, b), n).points
    assert len(r) == n
    assert np.all(np.diff(r) > 0)
    assert np.all(np.abs(r) < 1)
    grid = np.linspace(-1, 1, 2001)
    pmax = np.max(np.abs(jacobi_eval((a, b), n, grid)))
    assert np.max(np.abs(jacobi_eval((a, b), n, r))) < 1e-12 * pmax


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(1, 40))
def test_interlacing(a, b, n):
    r0 = jacobi_roots((a, b), n).points
    r1 = jacobi_roots((a, b), n + 1).points
    assert np.all(r1[:-1] < r0) and np.all(r0 < r1[1:])


@given(st.floats(-0.9, 3.0), st.integers(1, 60))
def test_symmetric_nodes(a, n):
    g = gauss_jacobi((a, a), n)
    np.testing.assert_allclose(g.points, -g.points[::-1], atol=1e-12)
    np.testing.assert_allclose(g.weights, g.weights[::-1], rtol=1e-12)


def test_midpoint_rule():
    g = gauss_jacobi(LEGENDRE, 1)
    assert g.points.tolist() == [0.0] and g.weights.tolist() == pytest.approx([2.0])


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(1, 50))
def test_weights_sum_to_mass(a, b, n):
    p = JacobiParam(a, b)
    g = gauss_jacobi(p, n)
    assert np.all(g.weights > 0)
    assert g.weights.sum() == pytest.approx(p.mass(), rel=1e-12)


def test_beta_integral_oracle():
    # int (1-x)^0.5 (1+x)^0.5 x^8 dx = B(9/2, 3/2) * ... evaluated via the Beta function
    g = gauss_jacobi((0.5, 0.5), 5)
    exact = math.gamma(4.5) * math.gamma(1.5) / math.gamma(6)  # int_{-1}^1 x^8 sqrt(1-x^2) dx
    assert float(g.weights @ g.points**8) == pytest.approx(exact, rel=1e-13)


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(1, 25))
def test_exactness_degree_2n_minus_1(a, b, n):
    g = gauss_jacobi((a, b), n)
    # monomials in (1+x)/2: int w ((1+x)/2)^m = 2^{a+b+1} B(a+1, b+m+1)
    for m in (0, n, 2 * n - 1):
        exact = 2 ** (a + b + 1) * math.exp(
            math.lgamma(a + 1) + math.lgamma(b + m + 1) - math.lgamma(a + b + m + 2)
        )
        got = float(g.weights @ ((1 + g.points) / 2) ** m)
        assert got == pytest.approx(exact, rel=1e-12)


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(1, 30))
def test_discrete_orthogonality(a, b, N):
    p = JacobiParam(a, b)
    g = gauss_jacobi(p, N + 1)
    T = jacobi_table(p, N, g.points)
    G = (T * g.weights) @ T.T
    norms = p.norm(np.arange(N + 1))
    scale = np.sqrt(np.outer(norms, norms))
    np.testing.assert_allclose(G / scale, np.eye(N + 1), atol=1e-11)


@pytest.mark.parametrize(
    "N, expected",
    [(2, [-1, 0, 1]), (3, [-1, -1 / math.sqrt(5), 1 / math.sqrt(5), 1])],
)
def test_lobatto_examples(N, expected):
    np.testing.assert_allclose(lobatto_nodes(N).points, expected, atol=1e-15)


@pytest.mark.parametrize("N", range(2, 41))
def test_lobatto_nodes_properties(N):
    nodes = lobatto_nodes(N)
    x = nodes.points
    assert len(x) == N + 1 and x[0] == -1.0 and x[-1] == 1.0
    assert np.all(np.diff(x) > 0)
    resid = jacobi_eval(LEGENDRE, N - 1, x) - jacobi_eval(LEGENDRE, N + 1, x)
    assert np.max(np.abs(resid)) < 1e-11
    assert nodes.weights.sum() == pytest.approx(2.0, rel=1e-13)
    # GLL rule is exact to degree 2N - 1
    assert float(nodes.weights @ x ** (2 * (N - 1))) == pytest.approx(2 / (2 * N - 1), rel=1e-12)


def test_modal_expansion():
    m = ModalExpansion(np.array([1.0, 0.0, 2.0]))
    assert m.degree == 2 and m.basis == "Legendre"
    x = np.linspace(-1, 1, 5)
    np.testing.assert_allclose(m(x), 1 + 2 * (1.5 * x * x - 0.5), atol=1e-15)
    assert ModalExpansion(np.ones(2), JacobiParam(1, 1)).basis == "Jacobi"
