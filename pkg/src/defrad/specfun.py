"""Special functions and Gauss-Legendre quadrature used across the package.

Everything here is plumbing for the physics modules: log-gamma evaluated with a
Lanczos approximation so normalization constants can be assembled in log space,
the gamma-function ratio that enters every deformed normalization, Gegenbauer
polynomials from their three-term recurrence, and Gauss-Legendre rules with an
order-doubling refinement loop for integrals that must be trusted blindly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

__all__ = [
    "ConvergenceError",
    "QuadratureRule",
    "gamma_ratio",
    "gauss_legendre_rule",
    "gegenbauer",
    "gegenbauer_derivative",
    "integrate",
    "integrate_adaptive",
    "log_gamma",
]


class ConvergenceError(RuntimeError):
    """An iterative numerical procedure failed to meet its tolerance."""


_LN_TWO_PI = math.log(2.0 * math.pi)

# Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
# Relative accuracy is a few 1e-15 over the positive real axis, which is what
# lets the 1e-13 budget below hold with margin.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for real x > 0.

    Parameters
    ----------
    x : float
        Argument, must be positive.

    Returns
    -------
    float
        ln Gamma(x), relative accuracy about 1e-14 on [0.5, 1e8].
    """
    if not x > 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x!r}")
    t = x + _LANCZOS_G - 0.5
    series = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        series += _LANCZOS_COEF[k] / (x + k - 1.0)
    return 0.5 * _LN_TWO_PI + (x - 0.5) * math.log(t) - t + math.log(series)


# Above this the ratio is evaluated through a differenced Stirling series: the
# plain difference of two log-gammas of size O(alpha ln alpha) keeps only an
# absolute accuracy of alpha*ulp, which is no longer small compared with the
# O(ln alpha) difference itself.
_RATIO_STIRLING_MIN = 64.0

# Stirling tail ln Gamma(x) ~ ... + sum b_k / x^(2k-1), b_k = B_2k/(2k(2k-1)).
_STIRLING_TAIL = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
)


def _stirling_tail(x: float) -> float:
    inv2 = 1.0 / (x * x)
    acc = 0.0
    power = 1.0 / x
    for b in _STIRLING_TAIL:
        acc += b * power
        power *= inv2
    return acc


def gamma_ratio(alpha: float) -> float:
    """Gamma(alpha + 1) / Gamma(alpha + 1/2), stable for alpha up to 1e8.

    The ratio grows like sqrt(alpha) and multiplies every deformed matrix
    element, so it must stay accurate even when alpha is enormous (the nearly
    undeformed regime). Evaluated as exp of the log-gamma difference, with the
    difference itself switched to a cancellation-free Stirling form for large
    alpha.
    """
    if not alpha > 0.5:
        raise ValueError(f"gamma_ratio requires alpha > 1/2, got {alpha!r}")
    if alpha < _RATIO_STIRLING_MIN:
        return math.exp(log_gamma(alpha + 1.0) - log_gamma(alpha + 0.5))
    # ln Gamma(a+1) - ln Gamma(a+1/2) with the large terms paired before any
    # floating subtraction: a*log1p(1/(2a+1)) keeps full precision.
    diff = (
        alpha * math.log1p(0.5 / (alpha + 0.5))
        + 0.5 * math.log(alpha + 1.0)
        - 0.5
        + _stirling_tail(alpha + 1.0)
        - _stirling_tail(alpha + 0.5)
    )
    return math.exp(diff)


def gegenbauer(n: int, alpha: float, x):
    """Gegenbauer polynomial C_n^alpha(x) by the three-term recurrence.

    Accepts a scalar or an ndarray for x and mirrors the input shape.
    """
    if n < 0:
        raise ValueError(f"gegenbauer requires n >= 0, got {n}")
    if not alpha > 0.0:
        raise ValueError(f"gegenbauer requires alpha > 0, got {alpha!r}")
    xa = np.asarray(x, dtype=float)
    c_prev = np.ones_like(xa)
    if n == 0:
        return float(c_prev) if np.ndim(x) == 0 else c_prev
    c_cur = 2.0 * alpha * xa
    for k in range(2, n + 1):
        c_prev, c_cur = c_cur, (
            2.0 * xa * (k + alpha - 1.0) * c_cur - (k + 2.0 * alpha - 2.0) * c_prev
        ) / k
    return float(c_cur) if np.ndim(x) == 0 else c_cur


def gegenbauer_derivative(n: int, alpha: float, x):
    """d/dx C_n^alpha(x), via the index-shift identity 2 alpha C_{n-1}^{alpha+1}."""
    if n < 0:
        raise ValueError(f"gegenbauer_derivative requires n >= 0, got {n}")
    if n == 0:
        xa = np.asarray(x, dtype=float)
        zero = np.zeros_like(xa)
        return float(zero) if np.ndim(x) == 0 else zero
    return 2.0 * alpha * gegenbauer(n - 1, alpha + 1.0, x)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on the reference interval (-1, 1)."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


@lru_cache(maxsize=32)
def _gauss_legendre_cached(order: int) -> QuadratureRule:
    # Newton iteration on the Legendre recurrence, all nodes at once. The
    # cosine guess brackets every root well enough that a handful of sweeps
    # reaches machine precision.
    i = np.arange(order, dtype=float)
    x = np.cos(math.pi * (i + 0.75) / (order + 0.5))
    dp = np.empty_like(x)
    for sweep in range(100):
        p_prev = np.zeros_like(x)
        p = np.ones_like(x)
        for k in range(order):
            p_prev, p = p, ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0)
        dp = order * (x * p - p_prev) / (x * x - 1.0)
        step = p / dp
        x -= step
        if np.max(np.abs(step)) < 1e-15:
            break
    else:
        raise ConvergenceError(f"Gauss-Legendre nodes failed to converge at order {order}")
    # One recurrence pass at the converged abscissas for the weights, then
    # enforce the exact symmetry of the rule.
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for k in range(order):
        p_prev, p = p, ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0)
    dp = order * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    x = x[::-1].copy()
    w = w[::-1].copy()
    x.setflags(write=False)
    w.setflags(write=False)
    return QuadratureRule(order=order, nodes=x, weights=w)


def gauss_legendre_rule(order: int) -> QuadratureRule:
    """Build (and cache) the Gauss-Legendre rule of the given order.

    Nodes come back strictly increasing and antisymmetric about zero; weights
    are positive, symmetric and sum to 2.
    """
    if order < 1:
        raise ValueError(f"quadrature order must be >= 1, got {order}")
    return _gauss_legendre_cached(int(order))


def integrate(f: Callable, a: float, b: float, rule: QuadratureRule) -> float:
    """Integrate f over [a, b] with a fixed rule.

    f is called once with the full ndarray of mapped nodes and must return
    finite values at every node.
    """
    if not a < b:
        raise ValueError(f"integration interval requires a < b, got [{a!r}, {b!r}]")
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    values = np.asarray(f(mid + half * rule.nodes), dtype=float)
    if values.shape != rule.nodes.shape:
        raise ValueError("integrand did not return one value per node")
    if not np.all(np.isfinite(values)):
        raise ValueError("integrand returned non-finite values")
    return half * float(np.dot(rule.weights, values))


def integrate_adaptive(
    f: Callable,
    a: float,
    b: float,
    rtol: float = 1e-12,
    order: int = 128,
    max_order: int = 4096,
) -> tuple[float, float]:
    """Integrate with order doubling until two successive results agree.

    Agreement is judged relative to the L1 mass of the integrand, so integrals
    that vanish by symmetry converge instead of chasing a relative tolerance
    on a true zero. Returns (value, change at the last doubling).

    Raises
    ------
    ConvergenceError
        If the doubled orders still disagree at max_order.
    """
    if not a < b:
        raise ValueError(f"integration interval requires a < b, got [{a!r}, {b!r}]")
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)

    def evaluate(n: int) -> tuple[float, float]:
        rule = gauss_legendre_rule(n)
        values = np.asarray(f(mid + half * rule.nodes), dtype=float)
        if not np.all(np.isfinite(values)):
            raise ValueError("integrand returned non-finite values")
        total = half * float(np.dot(rule.weights, values))
        mass = half * float(np.dot(rule.weights, np.abs(values)))
        return total, mass

    previous, _ = evaluate(order)
    n = order
    change = math.inf
    while n < max_order:
        n *= 2
        current, mass = evaluate(n)
        change = abs(current - previous)
        if change <= rtol * max(abs(current), mass):
            return current, change
        previous = current
    raise ConvergenceError(
        f"quadrature did not stabilize by order {max_order} (last change {change:.3e})"
    )
