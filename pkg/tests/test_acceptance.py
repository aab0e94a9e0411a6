"""Full-strength verification suite, one test per criterion.

Each test runs its check at the full level and prints the same pass/fail
line the verify subcommand would show, so `pytest -v -s` doubles as the
acceptance report.
"""

import pytest

from defrad import acceptance


def _run(check, *args):
    result = check(*args)
    print(acceptance.format_result(result))
    assert result.passed, result.detail
    return result


def test_criterion_01_undeformed_intensity_limit():
    _run(acceptance.check_undeformed_intensity_limit)


def test_criterion_02_intensity_asymptote():
    _run(acceptance.check_intensity_asymptote)


def test_criterion_03_spectrum_oracle_full_grid():
    _run(acceptance.check_spectrum_oracle, "full")


def test_criterion_04_orthonormality():
    _run(acceptance.check_orthonormality)


def test_criterion_05_closed_form_elements():
    _run(acceptance.check_closed_form_elements)


def test_criterion_06_harmonic_element_limit():
    _run(acceptance.check_harmonic_element_limit)


def test_criterion_07_derivation_path_equivalence():
    _run(acceptance.check_derivation_path_equivalence)


def test_criterion_08_dispersion_alpha_identity():
    _run(acceptance.check_dispersion_alpha_identity)


def test_criterion_09_prefactor_identity():
    _run(acceptance.check_prefactor_identity)


def test_criterion_10_selection_parity():
    result = _run(acceptance.check_selection_parity)
    assert "odd" in result.detail


def test_criterion_11_intensity_curve_shape():
    _run(acceptance.check_intensity_curve_shape)


def test_criterion_12_multiphoton_onset():
    _run(acceptance.check_multiphoton_onset)


def test_quick_level_only_changes_the_oracle_grid():
    quick = acceptance.check_spectrum_oracle("quick")
    assert quick.passed
    assert "2001 points" in quick.detail


def test_run_acceptance_order_and_level_guard():
    with pytest.raises(ValueError):
        acceptance.run_acceptance("fast")
    results = acceptance.run_acceptance("quick")
    assert [r.index for r in results] == list(range(1, 13))
    assert all(r.passed for r in results)
