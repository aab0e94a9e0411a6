"""Single field mode with a minimal-length deformed commutation relation.

A mode of frequency omega whose canonical pair obeys
[Q, P] = i hbar (1 + beta P^2) can be mapped to an auxiliary pair (q, p) with
the ordinary commutator, at the price of a bounded momentum: the Hamiltonian
becomes a trigonometric Poschl-Teller well in the momentum representation,

    H = (omega^2 / 2) q^2 + tan^2(p sqrt(beta)) / (2 beta),

with p confined to |p| < pi / (2 sqrt(beta)). Its spectrum is exactly solvable
and the eigenfunctions are Gegenbauer polynomials in x = sin(p sqrt(beta))
times a power of cos(p sqrt(beta)). The strength of the deformation enters
through the single dimensionless combination beta*hbar*omega; the Gegenbauer
index alpha is a function of it alone and tends to infinity in the harmonic
limit.

All normalization constants are assembled in log space because alpha reaches
1e8 when the deformation is tiny.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import gegenbauer, log_gamma

__all__ = [
    "AlphaParam",
    "DeformedMode",
    "EigenState",
    "UndeformedModeError",
    "alpha_of_mode",
    "energy_level",
    "eval_psi_p",
    "eval_psi_x",
    "ho_reference_psi",
]

_LN_TWO_PI = math.log(2.0 * math.pi)


class UndeformedModeError(ValueError):
    """A deformed-only quantity was requested for a mode with beta = 0."""


@dataclass(frozen=True)
class DeformedMode:
    """One field mode: frequency, deformation parameter and hbar.

    Attributes
    ----------
    omega : float
        Mode frequency, positive.
    beta : float
        Deformation parameter of the commutation relation, non-negative.
        beta = 0 is the ordinary harmonic mode.
    hbar : float
        Planck constant, kept symbolic so tests can run in natural units.
    """

    omega: float
    beta: float
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega!r}")
        if not self.beta >= 0.0:
            raise ValueError(f"beta must be non-negative, got {self.beta!r}")
        if not self.hbar > 0.0:
            raise ValueError(f"hbar must be positive, got {self.hbar!r}")

    @property
    def deformation(self) -> float:
        """The dimensionless deformation strength beta * hbar * omega."""
        return self.beta * self.hbar * self.omega

    @property
    def wbar(self) -> float:
        """Half the deformation strength; the natural expansion variable."""
        return 0.5 * self.deformation

    @property
    def p_max(self) -> float:
        """Half-width of the momentum domain, pi / (2 sqrt(beta))."""
        if self.beta == 0.0:
            return math.inf
        return 0.5 * math.pi / math.sqrt(self.beta)


@dataclass(frozen=True)
class AlphaParam:
    """Gegenbauer index of a deformed mode; always exceeds 1 for beta > 0."""

    value: float

    def __post_init__(self) -> None:
        if not self.value > 1.0:
            raise ValueError(f"alpha must exceed 1, got {self.value!r}")


@dataclass(frozen=True)
class EigenState:
    """Quantum number n of a given mode."""

    mode: DeformedMode
    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")


def alpha_of_mode(mode: DeformedMode) -> AlphaParam:
    """Gegenbauer index alpha for a deformed mode.

    alpha = 1/2 + sqrt(1/(beta hbar omega)^2 + 1/4). It decreases from
    infinity in the harmonic limit toward 1 at extreme deformation, and
    inverts in closed form: beta hbar omega = 1/sqrt(alpha (alpha - 1)).

    Raises
    ------
    UndeformedModeError
        If beta = 0; alpha is only defined for a deformed mode.
    """
    if mode.beta == 0.0:
        raise UndeformedModeError("alpha is undefined for an undeformed mode (beta = 0)")
    x = mode.deformation
    return AlphaParam(0.5 + math.sqrt(1.0 / (x * x) + 0.25))


def energy_level(mode: DeformedMode, n: int) -> float:
    """Energy of level n.

    E_n = hbar omega [ (n + 1/2) sqrt(1 + wbar^2) + wbar (n^2 + n + 1/2) ]
    with wbar = beta hbar omega / 2. The quadratic-in-n term is the hallmark
    of the deformation; at beta = 0 the ladder is the even harmonic one.
    """
    if n < 0 or n != int(n):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if mode.beta == 0.0:
        return mode.hbar * mode.omega * (n + 0.5)
    w = mode.wbar
    return mode.hbar * mode.omega * (
        (n + 0.5) * math.sqrt(1.0 + w * w) + w * (n * n + n + 0.5)
    )


def _gegenbauer_norm_log(alpha: float, n: int) -> float:
    """Log of the normalization constant multiplying (1-x^2)^(alpha/2-1/4) C_n^alpha.

    The squared constant is n! (alpha + n) 4^alpha Gamma(alpha)^2 /
    (2 pi Gamma(2 alpha + n)); with it the x-representation eigenfunctions are
    orthonormal on (-1, 1) with a flat measure.
    """
    return (
        0.5
        * (
            log_gamma(n + 1.0)
            + math.log(alpha + n)
            - _LN_TWO_PI
            - log_gamma(2.0 * alpha + n)
        )
        + alpha * math.log(2.0)
        + log_gamma(alpha)
    )


def eval_psi_x(state: EigenState, x):
    """Eigenfunction in the x = sin(p sqrt(beta)) representation.

    Orthonormal on (-1, 1) with flat measure dx. Accepts a scalar or ndarray
    and mirrors the input shape. Requires a deformed mode.
    """
    mode = state.mode
    if mode.beta == 0.0:
        raise UndeformedModeError("the x representation requires beta > 0")
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0):
        raise ValueError("x must lie in [-1, 1]")
    alpha = alpha_of_mode(mode).value
    log_norm = _gegenbauer_norm_log(alpha, state.n)
    poly = gegenbauer(state.n, alpha, xa)
    with np.errstate(divide="ignore"):
        envelope = np.where(
            np.abs(xa) < 1.0,
            np.exp(log_norm + (0.5 * alpha - 0.25) * np.log1p(-xa * xa)),
            0.0,
        )
    result = poly * envelope
    return float(result) if np.ndim(x) == 0 else result


def eval_psi_p(state: EigenState, p):
    """Momentum-representation eigenfunction, orthonormal in dp.

    psi_n(p) = beta^(1/4) * psi_x(sin pbar) * sqrt(cos pbar), pbar = p sqrt(beta),
    for |p| <= pi/(2 sqrt(beta)). The sqrt(cos) factor carries the Jacobian of
    the non-unitary change of variable between the two representations. For
    beta = 0 this falls back to the harmonic-oscillator eigenfunction.
    """
    mode = state.mode
    if mode.beta == 0.0:
        return ho_reference_psi(mode.omega, state.n, p, hbar=mode.hbar)
    pa = np.asarray(p, dtype=float)
    half_pi = 0.5 * math.pi
    pbar = pa * math.sqrt(mode.beta)
    # Tolerate endpoint rounding: p_max * sqrt(beta) can land an ulp above pi/2.
    if np.any(np.abs(pbar) > half_pi * (1.0 + 1e-12)):
        raise ValueError("p lies outside the momentum domain of the deformed mode")
    pbar = np.clip(pbar, -half_pi, half_pi)
    value = (
        mode.beta**0.25
        * eval_psi_x(state, np.sin(pbar))
        * np.sqrt(np.cos(pbar).clip(min=0.0))
    )
    return float(value) if np.ndim(p) == 0 else value


def ho_reference_psi(omega: float, n: int, p, hbar: float = 1.0):
    """Harmonic-oscillator momentum eigenfunction used as the beta -> 0 target.

    (pi hbar omega)^(-1/4) (n! 2^n)^(-1/2) H_n(eta) exp(-eta^2/2) with
    eta = p / sqrt(hbar omega).
    """
    if n < 0 or n != int(n):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if omega <= 0.0 or hbar <= 0.0:
        raise ValueError("omega and hbar must be positive")
    pa = np.asarray(p, dtype=float)
    scale = math.sqrt(hbar * omega)
    eta = pa / scale
    h_prev = np.zeros_like(eta)
    h = np.ones_like(eta)
    for k in range(n):
        h_prev, h = h, 2.0 * eta * h - 2.0 * k * h_prev
    log_norm = -0.25 * math.log(math.pi * hbar * omega) - 0.5 * (
        log_gamma(n + 1.0) + n * math.log(2.0)
    )
    result = h * np.exp(log_norm - 0.5 * eta * eta)
    return float(result) if np.ndim(p) == 0 else result
