"""Matrix elements of the coordinate and tangent-momentum operators.

The radiation coupling of a deformed mode needs two families of matrix
elements between its eigenstates: those of the coordinate q (which is
i hbar d/dp in the momentum representation) and those of tan(p sqrt(beta)),
the bounded object that replaces the momentum itself. Both reduce to smooth
one-dimensional integrals over pbar = p sqrt(beta) in (-pi/2, pi/2) once the
Gegenbauer form of the eigenfunctions is inserted; the derivative in q is
applied analytically so the quadrature only ever sees polynomials times
powers of cos(pbar).

For the fundamental (1, 0) pair both elements also have closed forms, which
serve as the primary cross-check of the quadrature route.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .oscillator import DeformedMode, UndeformedModeError, _gegenbauer_norm_log, alpha_of_mode
from .specfun import gamma_ratio, gegenbauer, gegenbauer_derivative, integrate_adaptive

__all__ = [
    "DEFAULT_MAX_N",
    "MatrixElementResult",
    "OperatorKind",
    "ScanEntry",
    "ScanResult",
    "q10_closed",
    "q_nm",
    "selection_scan",
    "tan10_closed",
    "tan_nm",
]

# Quadrature-backed elements are only offered up to this quantum number unless
# the caller raises the limit; far beyond it the polynomial degrees start to
# strain double precision for extreme alpha.
DEFAULT_MAX_N = 32

_HALF_PI = 0.5 * math.pi
_VANISHING_THRESHOLD = 1e-12


class OperatorKind(enum.Enum):
    POSITION = "position"
    TANGENT = "tangent"


@dataclass(frozen=True)
class MatrixElementResult:
    """One matrix element with the quadrature's own error estimate.

    Position elements are purely imaginary and antisymmetric under index
    exchange; tangent elements are purely real and symmetric.
    """

    kind: OperatorKind
    n: int
    nprime: int
    value: complex
    estimated_error: float


def q10_closed(mode: DeformedMode) -> complex:
    """Closed form of the coordinate element between levels 1 and 0.

    -i hbar sqrt(2 beta (alpha+1)) / (2 alpha + 1) * [Gamma(alpha+1)/Gamma(alpha+1/2)]^2.
    Its magnitude tends to sqrt(hbar / (2 omega)) in the harmonic limit.
    """
    alpha = alpha_of_mode(mode).value
    ratio = gamma_ratio(alpha)
    magnitude = (
        mode.hbar
        * math.sqrt(2.0 * mode.beta * (alpha + 1.0))
        / (2.0 * alpha + 1.0)
        * ratio
        * ratio
    )
    return complex(0.0, -magnitude)


def tan10_closed(mode: DeformedMode) -> float:
    """Closed form of the tan(pbar) element between levels 1 and 0.

    sqrt(2 (alpha+1)) / (alpha (2 alpha + 1)) * [Gamma(alpha+1)/Gamma(alpha+1/2)]^2.
    """
    alpha = alpha_of_mode(mode).value
    ratio = gamma_ratio(alpha)
    return (
        math.sqrt(2.0 * (alpha + 1.0))
        / (alpha * (2.0 * alpha + 1.0))
        * ratio
        * ratio
    )


def _check_indices(mode: DeformedMode, n: int, nprime: int, max_n: int) -> float:
    if mode.beta == 0.0:
        raise UndeformedModeError("matrix elements of the deformed operators require beta > 0")
    for label, value in (("n", n), ("nprime", nprime)):
        if value < 0 or value != int(value):
            raise ValueError(f"{label} must be a non-negative integer, got {value!r}")
        if value > max_n:
            raise ValueError(f"{label} = {value} exceeds the configured maximum {max_n}")
    return alpha_of_mode(mode).value


def _tangent_integrand(alpha: float, n: int, nprime: int):
    log_norm = _gegenbauer_norm_log(alpha, n) + _gegenbauer_norm_log(alpha, nprime)

    def f(pbar: np.ndarray) -> np.ndarray:
        s = np.sin(pbar)
        log_cos = np.log(np.cos(pbar))
        return (
            np.exp(log_norm + 2.0 * alpha * log_cos)
            * gegenbauer(n, alpha, s)
            * gegenbauer(nprime, alpha, s)
            * np.tan(pbar)
        )

    return f


def _position_integrand(alpha: float, n: int, nprime: int):
    # phi_n * d(phi_nprime)/dpbar with the cosine powers kept in one exponent:
    # d/dpbar [cos^alpha C_m(sin)] = cos^(alpha-1) [cos^2 C_m' (sin) - alpha sin C_m(sin)].
    log_norm = _gegenbauer_norm_log(alpha, n) + _gegenbauer_norm_log(alpha, nprime)

    def f(pbar: np.ndarray) -> np.ndarray:
        s = np.sin(pbar)
        c = np.cos(pbar)
        log_cos = np.log(c)
        bracket = c * c * gegenbauer_derivative(nprime, alpha, s) - alpha * s * gegenbauer(
            nprime, alpha, s
        )
        return (
            np.exp(log_norm + (2.0 * alpha - 1.0) * log_cos)
            * gegenbauer(n, alpha, s)
            * bracket
        )

    return f


def q_nm(
    mode: DeformedMode,
    n: int,
    nprime: int,
    rtol: float = 1e-12,
    max_n: int = DEFAULT_MAX_N,
) -> MatrixElementResult:
    """Coordinate matrix element <n| q |n'> by adaptive quadrature.

    Equals i hbar sqrt(beta) times the integral of phi_n d(phi_n')/dpbar over
    the rescaled momentum, with the derivative expanded analytically. Nonzero
    only when n + n' is odd; in particular every diagonal element vanishes.
    """
    alpha = _check_indices(mode, n, nprime, max_n)
    scale = mode.hbar * math.sqrt(mode.beta)
    value, change = integrate_adaptive(
        _position_integrand(alpha, n, nprime), -_HALF_PI, _HALF_PI, rtol=rtol
    )
    return MatrixElementResult(
        kind=OperatorKind.POSITION,
        n=n,
        nprime=nprime,
        value=complex(0.0, scale * value),
        estimated_error=scale * change,
    )


def tan_nm(
    mode: DeformedMode,
    n: int,
    nprime: int,
    rtol: float = 1e-12,
    max_n: int = DEFAULT_MAX_N,
) -> MatrixElementResult:
    """Tangent matrix element <n| tan(p sqrt(beta)) |n'> by adaptive quadrature.

    The integrand phi_n phi_n' tan(pbar) behaves like cos^(2 alpha - 1) near
    the domain edges, so for alpha > 1 it is bounded and needs no special
    endpoint treatment. Nonzero only when n + n' is odd.
    """
    alpha = _check_indices(mode, n, nprime, max_n)
    value, change = integrate_adaptive(
        _tangent_integrand(alpha, n, nprime), -_HALF_PI, _HALF_PI, rtol=rtol
    )
    return MatrixElementResult(
        kind=OperatorKind.TANGENT,
        n=n,
        nprime=nprime,
        value=complex(value, 0.0),
        estimated_error=change,
    )


@dataclass(frozen=True)
class ScanEntry:
    n: int
    nprime: int
    q_abs: float
    tan_abs: float
    q_vanishes: bool
    tan_vanishes: bool


@dataclass(frozen=True)
class ScanResult:
    """Magnitude table of both operators with the empirical selection rule.

    nonzero parity is "odd" when the vanishing elements are exactly those
    with even n + n', "even" for the converse, and "mixed" if the zeros do
    not line up with a single parity class.
    """

    nmax: int
    threshold: float
    entries: tuple[ScanEntry, ...]
    q_nonzero_parity: str
    tan_nonzero_parity: str


def _parity_rule(vanishes: dict[tuple[int, int], bool]) -> str:
    odd_ok = all(not v for (n, m), v in vanishes.items() if (n + m) % 2 == 1)
    even_ok = all(v for (n, m), v in vanishes.items() if (n + m) % 2 == 0)
    if odd_ok and even_ok:
        return "odd"
    odd_vanish = all(v for (n, m), v in vanishes.items() if (n + m) % 2 == 1)
    even_alive = all(not v for (n, m), v in vanishes.items() if (n + m) % 2 == 0)
    if odd_vanish and even_alive:
        return "even"
    return "mixed"


def selection_scan(
    mode: DeformedMode,
    nmax: int,
    rtol: float = 1e-12,
    threshold: float = _VANISHING_THRESHOLD,
) -> ScanResult:
    """Scan |q_nm| and |tan_nm| for all index pairs up to nmax.

    An element counts as vanishing when its magnitude falls below threshold
    times the largest magnitude in its row (fixed n, all n'), which separates
    symmetry zeros from small-but-finite couplings regardless of the overall
    scale of the operator.
    """
    if nmax < 1:
        raise ValueError(f"nmax must be at least 1, got {nmax}")
    pairs = [(n, m) for n in range(nmax + 1) for m in range(nmax + 1)]
    q_mag = {}
    tan_mag = {}
    for n, m in pairs:
        q_mag[(n, m)] = abs(q_nm(mode, n, m, rtol=rtol, max_n=max(nmax, DEFAULT_MAX_N)).value)
        tan_mag[(n, m)] = abs(tan_nm(mode, n, m, rtol=rtol, max_n=max(nmax, DEFAULT_MAX_N)).value)

    def classify(mag: dict[tuple[int, int], float]) -> dict[tuple[int, int], bool]:
        row_max = {
            n: max(mag[(n, m)] for m in range(nmax + 1)) for n in range(nmax + 1)
        }
        return {(n, m): mag[(n, m)] <= threshold * row_max[n] for n, m in pairs}

    q_vanishes = classify(q_mag)
    tan_vanishes = classify(tan_mag)
    entries = tuple(
        ScanEntry(
            n=n,
            nprime=m,
            q_abs=q_mag[(n, m)],
            tan_abs=tan_mag[(n, m)],
            q_vanishes=q_vanishes[(n, m)],
            tan_vanishes=tan_vanishes[(n, m)],
        )
        for n, m in pairs
    )
    return ScanResult(
        nmax=nmax,
        threshold=threshold,
        entries=entries,
        q_nonzero_parity=_parity_rule(q_vanishes),
        tan_nonzero_parity=_parity_rule(tan_vanishes),
    )
