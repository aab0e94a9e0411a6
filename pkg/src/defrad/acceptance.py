"""End-to-end verification checks behind the verify subcommand.

Each check exercises one load-bearing property of the package through its
public interface and reports a single pass/fail line with the measured
numbers. The quick level shrinks only the spectrum-oracle grid; everything
else is cheap enough to run at full strength every time.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .cli import gcurve_table
from .melem import q10_closed, q_nm, selection_scan, tan10_closed, tan_nm
from .oracle import GridSpec, compare_spectra, numeric_overlap
from .oscillator import DeformedMode, EigenState, alpha_of_mode
from .radiation import (
    alpha_bar,
    g_asymptote,
    g_factor,
    g_first_principles,
    large_beta_prefactor_check,
)
from .reports import parse_csv, render_csv

__all__ = [
    "CriterionResult",
    "format_result",
    "run_acceptance",
]


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of one verification check."""

    index: int
    name: str
    passed: bool
    detail: str


def format_result(result: CriterionResult) -> str:
    status = "PASS" if result.passed else "FAIL"
    return f"{status}  {result.index:2d}  {result.name}: {result.detail}"


def check_undeformed_intensity_limit() -> CriterionResult:
    zero = g_factor(0.0)
    near = g_factor(1e-8)
    deviation = abs(near - 1.0)
    passed = zero == 1.0 and deviation <= 1e-4
    return CriterionResult(
        1,
        "undeformed intensity limit",
        passed,
        f"g(0) = {zero!r}, |g(1e-8) - 1| = {deviation:.3e} (tol 1e-4)",
    )


def check_intensity_asymptote() -> CriterionResult:
    dev3 = abs(g_factor(1e3) / g_asymptote(1e3) - 1.0)
    dev4 = abs(g_factor(1e4) / g_asymptote(1e4) - 1.0)
    passed = dev3 <= 2e-2 and dev4 <= 2e-3 and dev4 < dev3
    return CriterionResult(
        2,
        "intensity asymptote",
        passed,
        f"ratio deviation {dev3:.3e} at 1e3 (tol 2e-2), "
        f"{dev4:.3e} at 1e4 (tol 2e-3), decreasing: {dev4 < dev3}",
    )


def check_spectrum_oracle(level: str) -> CriterionResult:
    if level == "quick":
        npoints, tol = 2001, 1e-4
    else:
        npoints, tol = 20001, 1e-6
    spec = GridSpec(npoints=npoints, nlevels=9)
    worst = 0.0
    slowest = 0.0
    for x in (0.1, 1.0, 2.0, 10.0):
        started = time.perf_counter()
        err = compare_spectra(DeformedMode(omega=x, beta=1.0), spec)
        elapsed = time.perf_counter() - started
        worst = max(worst, err)
        slowest = max(slowest, elapsed)
    passed = worst <= tol and slowest <= 10.0
    return CriterionResult(
        3,
        "spectrum vs grid oracle",
        passed,
        f"worst relative gap {worst:.3e} (tol {tol:g}) over 9 levels at "
        f"{npoints} points, slowest case {slowest:.2f} s (budget 10 s)",
    )


def check_orthonormality() -> CriterionResult:
    worst = 0.0
    for x in (0.5, 2.0):
        mode = DeformedMode(omega=x, beta=1.0)
        states = [EigenState(mode, n) for n in range(11)]
        for n, state_n in enumerate(states):
            for state_m in states[n:]:
                overlap = numeric_overlap(state_n, state_m)
                target = 1.0 if state_n.n == state_m.n else 0.0
                worst = max(worst, abs(overlap - target))
    passed = worst <= 1e-10
    return CriterionResult(
        4,
        "eigenfunction orthonormality",
        passed,
        f"worst |<n|m> - delta| = {worst:.3e} for n, m <= 10 (tol 1e-10)",
    )


def check_closed_form_elements() -> CriterionResult:
    worst = 0.0
    for x in (0.1, 2.0**-0.5, 2.0, 10.0):
        mode = DeformedMode(omega=x, beta=1.0)
        q_ref = q10_closed(mode)
        t_ref = tan10_closed(mode)
        q_dev = abs(q_nm(mode, 1, 0).value - q_ref) / abs(q_ref)
        t_dev = abs(tan_nm(mode, 1, 0).value - t_ref) / abs(t_ref)
        worst = max(worst, q_dev, t_dev)
    passed = worst <= 1e-8
    return CriterionResult(
        5,
        "closed-form matrix elements",
        passed,
        f"worst relative gap {worst:.3e} between quadrature and closed "
        f"forms for the 1->0 elements (tol 1e-8)",
    )


def check_harmonic_element_limit() -> CriterionResult:
    mode = DeformedMode(omega=1.0, beta=1e-4)
    target = math.sqrt(mode.hbar / (2.0 * mode.omega))
    deviation = abs(abs(q10_closed(mode)) - target) / target
    passed = deviation <= 1e-3
    return CriterionResult(
        6,
        "harmonic limit of the dipole element",
        passed,
        f"relative gap {deviation:.3e} from sqrt(hbar/2 omega) at weak "
        f"deformation (tol 1e-3)",
    )


def check_derivation_path_equivalence() -> CriterionResult:
    worst = 0.0
    for wbar in np.logspace(-3.0, 3.0, 61):
        reference = g_factor(float(wbar))
        rebuilt = g_first_principles(float(wbar))
        worst = max(worst, abs(rebuilt - reference) / reference)
    passed = worst <= 1e-6
    return CriterionResult(
        7,
        "derivation-path equivalence",
        passed,
        f"worst relative gap {worst:.3e} between the closed kernel and its "
        f"first-principles rebuild on 61 log points (tol 1e-6)",
    )


def check_dispersion_alpha_identity() -> CriterionResult:
    worst = 0.0
    for s in np.logspace(-4.0, 4.0, 41):
        s = float(s)
        wbar = s * math.sqrt(1.0 + s * s) + 2.0 * s * s
        direct = alpha_of_mode(DeformedMode(omega=1.0, beta=2.0 * s)).value
        worst = max(worst, abs(alpha_bar(wbar) - direct))
    passed = worst <= 1e-10
    return CriterionResult(
        8,
        "dispersion/index identity",
        passed,
        f"worst |alpha_bar(shifted frequency) - alpha| = {worst:.3e} over "
        f"41 log points (tol 1e-10); consistent with the energy-side "
        f"dispersion sign",
    )


def check_prefactor_identity() -> CriterionResult:
    factored, first_principles = large_beta_prefactor_check()
    gap = abs(factored - first_principles)
    passed = gap <= 1e-12
    return CriterionResult(
        9,
        "strong-deformation prefactor identity",
        passed,
        f"two derivation routes give {factored:.14g} and "
        f"{first_principles:.14g}, gap {gap:.3e} (tol 1e-12)",
    )


def check_selection_parity() -> CriterionResult:
    scan = selection_scan(DeformedMode(omega=1.0, beta=1.0), nmax=6)
    consistent = all(
        entry.q_vanishes == entry.tan_vanishes == ((entry.n + entry.nprime) % 2 == 0)
        for entry in scan.entries
    )
    definite = scan.q_nonzero_parity == scan.tan_nonzero_parity != "mixed"
    passed = consistent and definite
    return CriterionResult(
        10,
        "selection-rule parity scan",
        passed,
        f"q and tangent elements nonzero only at {scan.q_nonzero_parity} "
        f"n + n' for n, n' <= 6 (threshold {scan.threshold:g} relative)",
    )


def check_intensity_curve_shape() -> CriterionResult:
    # Round-trips through the same table builder and CSV renderer the
    # gcurve subcommand uses, so the emitted column is what gets checked.
    text = render_csv(*gcurve_table(0.0, 10.0, 201))
    _, columns, rows = parse_csv(text)
    g_values = [float(row[columns.index("g")]) for row in rows]
    starts_at_one = g_values[0] == 1.0
    decreasing = all(b < a for a, b in zip(g_values, g_values[1:]))
    passed = starts_at_one and decreasing and len(g_values) == 201
    return CriterionResult(
        11,
        "intensity curve shape",
        passed,
        f"emitted g column: {len(g_values)} rows, first {g_values[0]!r}, "
        f"strictly decreasing: {decreasing}",
    )


def check_multiphoton_onset() -> CriterionResult:
    weak = abs(tan_nm(DeformedMode(omega=1e-3, beta=1.0), 3, 0).value)
    strong = abs(tan_nm(DeformedMode(omega=1.0, beta=1.0), 3, 0).value)
    ratio = strong / weak
    passed = ratio >= 10.0
    return CriterionResult(
        12,
        "many-photon onset",
        passed,
        f"|tangent 3->0| grows {ratio:.3g}x from weak to unit deformation "
        f"(required >= 10x)",
    )


def run_acceptance(level: str = "full") -> list[CriterionResult]:
    """Run the whole verification suite; quick level shrinks only check 3."""
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    return [
        check_undeformed_intensity_limit(),
        check_intensity_asymptote(),
        check_spectrum_oracle(level),
        check_orthonormality(),
        check_closed_form_elements(),
        check_harmonic_element_limit(),
        check_derivation_path_equivalence(),
        check_dispersion_alpha_identity(),
        check_prefactor_identity(),
        check_selection_parity(),
        check_intensity_curve_shape(),
        check_multiphoton_onset(),
    ]
