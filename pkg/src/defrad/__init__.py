"""Deformed-field radiation toolkit.

Spectra, eigenfunctions and matrix elements of a field mode with a
minimal-length deformed commutation relation, and the resulting
spontaneous-emission intensity curves.
"""

from .melem import (
    MatrixElementResult,
    OperatorKind,
    ScanEntry,
    ScanResult,
    q10_closed,
    q_nm,
    selection_scan,
    tan10_closed,
    tan_nm,
)
from .oracle import (
    GridSpec,
    compare_spectra,
    diagonalize_momentum_grid,
    eigenvector_on_grid,
    numeric_norm,
    numeric_overlap,
)
from .oscillator import (
    AlphaParam,
    DeformedMode,
    EigenState,
    UndeformedModeError,
    alpha_of_mode,
    energy_level,
    eval_psi_p,
    eval_psi_x,
    ho_reference_psi,
)
from .radiation import (
    DispersionSign,
    GCurvePoint,
    PhysicalConstants,
    TransitionAmplitudes,
    absolute_intensity,
    alpha_bar,
    dipole_intensity_ratio,
    g_asymptote,
    g_factor,
    g_first_principles,
    gcurve,
    intensity_ratio,
    large_beta_prefactor_check,
    photon_frequency,
    photon_frequency_derivative,
)
from .specfun import (
    ConvergenceError,
    QuadratureRule,
    gamma_ratio,
    gauss_legendre_rule,
    gegenbauer,
    gegenbauer_derivative,
    integrate,
    integrate_adaptive,
    log_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaParam",
    "ConvergenceError",
    "DeformedMode",
    "DispersionSign",
    "EigenState",
    "GCurvePoint",
    "GridSpec",
    "MatrixElementResult",
    "OperatorKind",
    "PhysicalConstants",
    "QuadratureRule",
    "ScanEntry",
    "ScanResult",
    "TransitionAmplitudes",
    "UndeformedModeError",
    "absolute_intensity",
    "alpha_bar",
    "alpha_of_mode",
    "compare_spectra",
    "diagonalize_momentum_grid",
    "dipole_intensity_ratio",
    "eigenvector_on_grid",
    "energy_level",
    "eval_psi_p",
    "eval_psi_x",
    "g_asymptote",
    "g_factor",
    "g_first_principles",
    "gamma_ratio",
    "gauss_legendre_rule",
    "gcurve",
    "gegenbauer",
    "gegenbauer_derivative",
    "ho_reference_psi",
    "integrate",
    "integrate_adaptive",
    "intensity_ratio",
    "large_beta_prefactor_check",
    "log_gamma",
    "numeric_norm",
    "numeric_overlap",
    "photon_frequency",
    "photon_frequency_derivative",
    "q10_closed",
    "q_nm",
    "selection_scan",
    "tan10_closed",
    "tan_nm",
    "__version__",
]
