"""Tests for the special-function and quadrature primitives.

The reference values here come from two independent oracles: mpmath for
log-gamma, and a derivative-form Gegenbauer evaluator built on exact
term-by-term differentiation (no shared code with the package).
"""

import math

import mpmath
import numpy as np
import pytest

from defrad import (
    ConvergenceError,
    gauss_legendre_rule,
    gegenbauer,
    gegenbauer_derivative,
    gamma_ratio,
    integrate,
    integrate_adaptive,
    log_gamma,
)

mpmath.mp.dps = 40


def gegenbauer_from_derivatives(n, alpha, x):
    """Independent Gegenbauer evaluation via the n-th derivative form.

    Represents d^k/dx^k (1-x^2)^(n+alpha-1/2) exactly as a dictionary of
    terms c * x^j * (1-x^2)^(s+alpha-1/2) with integer j, s, differentiating
    term by term. After n derivatives every surviving power of (1-x^2) is a
    nonnegative integer once the (1-x^2)^(1/2-alpha) weight is divided out,
    so the evaluation is polynomial and finite on the whole of [-1, 1].
    """
    terms = {(0, n): 1.0}
    for _ in range(n):
        step = {}
        for (j, s), c in terms.items():
            if j >= 1:
                step[(j - 1, s)] = step.get((j - 1, s), 0.0) + c * j
            step[(j + 1, s - 1)] = step.get((j + 1, s - 1), 0.0) - 2.0 * c * (s + alpha - 0.5)
        terms = step
    poly = sum(c * x**j * (1.0 - x * x) ** s for (j, s), c in terms.items())
    log_prefactor = (
        math.lgamma(alpha + 0.5)
        + math.lgamma(n + 2.0 * alpha)
        - math.lgamma(2.0 * alpha)
        - math.lgamma(alpha + n + 0.5)
        - n * math.log(2.0)
        - math.lgamma(n + 1)
    )
    return (-1.0) ** n * math.exp(log_prefactor) * poly


# ---------------------------------------------------------------- log_gamma


def test_log_gamma_trivial_values():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)


@pytest.mark.parametrize("x", [0.5, 0.75, 1.0, 1.5, 2.0, 3.7, 10.0, 1e2, 1e3, 1e4, 1e6, 1e8])
def test_log_gamma_against_mpmath(x):
    ref = float(mpmath.loggamma(x))
    # Relative tolerance scaled away from the zeros of ln Gamma at x = 1, 2.
    assert abs(log_gamma(x) - ref) <= 1e-13 * max(abs(ref), 1.0)


def test_log_gamma_sweep_against_mpmath():
    for x in np.logspace(math.log10(0.5), 8.0, 60):
        ref = float(mpmath.loggamma(x))
        assert abs(log_gamma(float(x)) - ref) <= 1e-13 * max(abs(ref), 1.0)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5])
def test_log_gamma_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        log_gamma(bad)


# --------------------------------------------------------------- gamma_ratio


def test_gamma_ratio_hand_values():
    # Gamma(2)/Gamma(3/2) and Gamma(3)/Gamma(5/2)
    assert gamma_ratio(1.0) == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-14)
    assert gamma_ratio(2.0) == pytest.approx(8.0 / (3.0 * math.sqrt(math.pi)), rel=1e-14)


@pytest.mark.parametrize(
    "alpha", [0.6, 1.0, 2.5, 10.0, 63.0, 63.5, 64.0, 64.5, 100.0, 1e3, 1e5, 1e8]
)
def test_gamma_ratio_functional_identity(alpha):
    # r(a+1)/r(a) = (a+1)/(a+1/2); the alpha list straddles the internal
    # switch to the Stirling form so a branch mismatch would show up here.
    lhs = gamma_ratio(alpha + 1.0) / gamma_ratio(alpha)
    rhs = (alpha + 1.0) / (alpha + 0.5)
    assert lhs == pytest.approx(rhs, rel=1e-13)


@pytest.mark.parametrize("alpha, tol", [(1e4, 2e-5), (1e6, 2e-7), (1e8, 2e-9)])
def test_gamma_ratio_stirling_limit(alpha, tol):
    # r(a)/sqrt(a) -> 1 with a 1/(8a) correction.
    assert abs(gamma_ratio(alpha) / math.sqrt(alpha) - 1.0) < tol


def test_gamma_ratio_large_alpha_against_mpmath():
    for alpha in (1e3, 1e5, 1e7):
        ref = float(mpmath.exp(mpmath.loggamma(alpha + 1.0) - mpmath.loggamma(alpha + 0.5)))
        assert gamma_ratio(alpha) == pytest.approx(ref, rel=1e-13)


def test_gamma_ratio_rejects_small_alpha():
    with pytest.raises(ValueError):
        gamma_ratio(0.5)
    with pytest.raises(ValueError):
        gamma_ratio(-2.0)


# ---------------------------------------------------------------- gegenbauer


def test_gegenbauer_base_cases():
    assert gegenbauer(0, 3.3, 0.7) == 1.0
    assert gegenbauer(1, 2.0, 0.5) == pytest.approx(2.0, rel=1e-15)
    assert gegenbauer(2, 2.0, 0.5) == pytest.approx(1.0, rel=1e-14)
    # C_3 closed form 4/3 a(a+1)(a+2) x^3 - 2a(a+1) x at a = 2, x = 1/2
    assert gegenbauer(3, 2.0, 0.5) == pytest.approx(-2.0, rel=1e-14)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("alpha", [0.75, 1.25, 2.0, 3.5, 10.0])
def test_gegenbauer_matches_derivative_form(n, alpha):
    for x in (-1.0, -0.95, -0.6, -0.3, 0.0, 0.2, 0.5, 0.9, 1.0):
        ref = gegenbauer_from_derivatives(n, alpha, x)
        assert abs(gegenbauer(n, alpha, x) - ref) <= 1e-9 * max(abs(ref), 1.0)


def test_gegenbauer_array_matches_scalar():
    x = np.linspace(-1.0, 1.0, 11)
    vals = gegenbauer(4, 1.618, x)
    assert vals.shape == x.shape
    for xi, vi in zip(x, vals):
        assert vi == pytest.approx(gegenbauer(4, 1.618, float(xi)), rel=1e-14, abs=1e-14)


def test_gegenbauer_rejects_bad_arguments():
    with pytest.raises(ValueError):
        gegenbauer(-1, 2.0, 0.0)
    with pytest.raises(ValueError):
        gegenbauer(2, 0.0, 0.0)


def test_gegenbauer_derivative_hand_value():
    # d/dx C_2 = 4a(a+1)x
    a = 2.0
    assert gegenbauer_derivative(2, a, 0.3) == pytest.approx(4 * a * (a + 1) * 0.3, rel=1e-13)
    assert gegenbauer_derivative(0, a, 0.3) == 0.0


@pytest.mark.parametrize("n, alpha", [(1, 2.0), (3, 1.5), (5, 4.2)])
def test_gegenbauer_derivative_matches_finite_difference(n, alpha):
    h = 1e-6
    for x in (-0.4, 0.1, 0.55):
        fd = (gegenbauer(n, alpha, x + h) - gegenbauer(n, alpha, x - h)) / (2 * h)
        assert gegenbauer_derivative(n, alpha, x) == pytest.approx(fd, rel=5e-9, abs=1e-8)


# ---------------------------------------------------------------- quadrature


@pytest.mark.parametrize("order", [2, 8, 64, 128, 511])
def test_rule_node_and_weight_invariants(order):
    rule = gauss_legendre_rule(order)
    nodes, weights = rule.nodes, rule.weights
    assert len(nodes) == len(weights) == order
    assert np.all(np.diff(nodes) > 0)
    assert nodes[0] > -1.0 and nodes[-1] < 1.0
    assert np.all(weights > 0)
    # symmetry about zero
    np.testing.assert_allclose(nodes, -nodes[::-1], atol=1e-15)
    np.testing.assert_allclose(weights, weights[::-1], rtol=1e-15)
    assert abs(weights.sum() - 2.0) <= 1e-14


@pytest.mark.parametrize("order", [2, 5, 16])
def test_rule_integrates_polynomials_exactly(order):
    rule = gauss_legendre_rule(order)
    for k in range(2 * order):
        got = float(np.sum(rule.weights * rule.nodes**k))
        if k % 2 == 1:
            assert abs(got) <= 1e-13
        else:
            exact = 2.0 / (k + 1)
            assert got == pytest.approx(exact, rel=1e-13)


def test_rule_is_cached_and_frozen():
    rule = gauss_legendre_rule(128)
    assert gauss_legendre_rule(128) is rule
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


def test_rule_rejects_bad_order():
    with pytest.raises(ValueError):
        gauss_legendre_rule(0)


# ----------------------------------------------------------------- integrate


def test_integrate_monomial():
    rule = gauss_legendre_rule(8)
    assert integrate(lambda x: x**2, -1.0, 1.0, rule) == pytest.approx(2.0 / 3.0, rel=1e-14)


def test_integrate_sine_over_half_period():
    rule = gauss_legendre_rule(64)
    assert integrate(np.sin, 0.0, math.pi, rule) == pytest.approx(2.0, rel=1e-12)


def test_integrate_cosine_power_beta_identity():
    # int cos^4 over a half period equals sqrt(pi) Gamma(5/2) / Gamma(3)
    rule = gauss_legendre_rule(64)
    got = integrate(lambda u: np.cos(u) ** 4, -math.pi / 2, math.pi / 2, rule)
    exact = math.sqrt(math.pi) * math.gamma(2.5) / math.gamma(3.0)
    assert exact == pytest.approx(3.0 * math.pi / 8.0, rel=1e-15)
    assert got == pytest.approx(exact, rel=1e-12)


def test_integrate_convergence_once_resolved():
    a = integrate(np.exp, -1.0, 1.0, gauss_legendre_rule(64))
    b = integrate(np.exp, -1.0, 1.0, gauss_legendre_rule(128))
    assert abs(a - b) <= 1e-12 * abs(b)


def test_integrate_rejects_bad_interval_and_nonfinite():
    rule = gauss_legendre_rule(8)
    with pytest.raises(ValueError):
        integrate(np.exp, 1.0, -1.0, rule)
    with pytest.raises(ValueError):
        integrate(lambda x: np.full_like(x, np.inf), -1.0, 1.0, rule)


def test_adaptive_gaussian():
    value, change = integrate_adaptive(lambda x: np.exp(-50.0 * x * x), -1.0, 1.0)
    exact = math.sqrt(math.pi / 50.0) * math.erf(math.sqrt(50.0))
    assert value == pytest.approx(exact, rel=1e-12)
    assert change <= 1e-12 * abs(value)


def test_adaptive_handles_vanishing_integral():
    # An odd integrand integrates to zero; convergence must be judged against
    # the mass of |f|, not against the vanishing result.
    value, _ = integrate_adaptive(lambda x: np.sin(3.0 * x), -1.0, 1.0)
    assert abs(value) < 1e-13


def test_adaptive_raises_when_order_budget_exhausted():
    with pytest.raises(ConvergenceError):
        integrate_adaptive(
            lambda x: np.sqrt(np.abs(x)), -1.0, 1.0, rtol=1e-14, order=8, max_order=16
        )
