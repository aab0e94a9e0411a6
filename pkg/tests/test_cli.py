"""End-to-end tests of the command-line interface.

Each test drives a fresh interpreter the way a user would, so argument
parsing, exit codes, stream handling and file output are all exercised for
real.
"""

import json
import math
import pathlib
import subprocess
import sys

import pytest

from defrad import DeformedMode, energy_level, g_factor

GOLDEN = pathlib.Path(__file__).parent / "golden" / "gcurve_0_10_201.csv"


def run_cli(*args, check=True):
    result = subprocess.run(
        [sys.executable, "-m", "defrad", *args],
        capture_output=True,
    )
    if check:
        assert result.returncode == 0, result.stderr.decode()
    return result


def parse_table(text):
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


def test_spectrum_csv_matches_library_exactly():
    out = run_cli(
        "spectrum", "--beta", "1", "--omega", "2", "--nmax", "5"
    ).stdout.decode()
    header, rows = parse_table(out)
    assert header == ["n", "energy"]
    assert len(rows) == 6
    mode = DeformedMode(omega=2.0, beta=1.0)
    for row in rows:
        # 17 significant digits survive the text round trip bit for bit
        assert float(row[1]) == energy_level(mode, int(row[0]))


def test_spectrum_json_structure():
    out = run_cli(
        "spectrum", "--beta", "0", "--omega", "1", "--nmax", "2", "--format", "json"
    ).stdout.decode()
    document = json.loads(out)
    assert document["params"]["command"] == "spectrum"
    assert [row["energy"] for row in document["rows"]] == [0.5, 1.5, 2.5]


def test_wavefunc_endpoints_vanish():
    out = run_cli(
        "wavefunc", "--beta", "1", "--omega", "1", "--n", "3", "--points", "11"
    ).stdout.decode()
    _, rows = parse_table(out)
    assert len(rows) == 11
    assert float(rows[0][1]) == 0.0 and float(rows[-1][1]) == 0.0
    assert float(rows[0][0]) == -math.pi / 2.0
    # n = 3 is odd under p -> -p
    for row, mirrored in zip(rows, reversed(rows)):
        assert float(row[1]) == pytest.approx(-float(mirrored[1]), abs=1e-15)


def test_melem_both_operators():
    out = run_cli(
        "melem", "--beta", "1", "--omega", "1", "--n", "1", "--nprime", "0"
    ).stdout.decode()
    header, rows = parse_table(out)
    assert header == ["operator", "n", "nprime", "value_re", "value_im", "estimated_error"]
    by_operator = {row[0]: row for row in rows}
    assert set(by_operator) == {"q", "tan"}
    assert float(by_operator["q"][3]) == 0.0  # q purely imaginary
    assert float(by_operator["q"][4]) < 0.0
    assert float(by_operator["tan"][4]) == 0.0  # tan purely real
    assert float(by_operator["tan"][3]) > 0.0


def test_scan_reports_parity_in_comments():
    out = run_cli(
        "scan", "--beta", "1", "--omega", "1", "--nmax", "2"
    ).stdout.decode()
    assert "# q_nonzero_parity = odd" in out
    assert "# tan_nonzero_parity = odd" in out
    _, rows = parse_table(out)
    assert len(rows) == 9
    for row in rows:
        vanish = (int(row[0]) + int(row[1])) % 2 == 0
        assert row[4] == ("true" if vanish else "false")


def test_dispersion_hand_value():
    out = run_cli(
        "dispersion",
        "--beta", "1", "--omega-min", "0", "--omega-max", "1", "--points", "2",
    ).stdout.decode()
    _, rows = parse_table(out)
    assert float(rows[0][1]) == 0.0
    assert float(rows[1][1]) == pytest.approx(math.sqrt(1.25) + 1.0, rel=1e-15)


def test_gcurve_matches_golden_bytes():
    out = run_cli(
        "gcurve", "--wbar-min", "0", "--wbar-max", "10", "--points", "201"
    ).stdout
    assert out == GOLDEN.read_bytes()


def test_gcurve_asymptote_column():
    out = run_cli(
        "gcurve",
        "--wbar-min", "1", "--wbar-max", "4", "--points", "4", "--asymptote",
    ).stdout.decode()
    header, rows = parse_table(out)
    assert header == ["wbar", "g", "g_asymptote"]
    assert float(rows[0][1]) == g_factor(1.0)


def test_gcurve_log_grid_rejects_zero_start():
    result = run_cli(
        "gcurve",
        "--wbar-min", "0", "--wbar-max", "1", "--points", "5", "--log",
        check=False,
    )
    assert result.returncode == 2


def test_svg_output_is_svg_11_and_deterministic():
    args = (
        "gcurve",
        "--wbar-min", "0", "--wbar-max", "10", "--points", "21",
        "--format", "svg",
    )
    first = run_cli(*args).stdout
    second = run_cli(*args).stdout
    assert first.startswith(b"<?xml")
    assert b'"-//W3C//DTD SVG 1.1//EN"' in first
    assert first == second


def test_output_flag_writes_file_and_keeps_stdout_quiet(tmp_path):
    target = tmp_path / "spectrum.csv"
    result = run_cli(
        "spectrum", "--beta", "1", "--omega", "1", "--nmax", "3",
        "--output", str(target),
    )
    assert result.stdout == b""
    header, rows = parse_table(target.read_text())
    assert header == ["n", "energy"] and len(rows) == 4


def test_figure_flag_renders_alongside_csv(tmp_path):
    svg_path = tmp_path / "curve.svg"
    png_path = tmp_path / "curve.png"
    out = run_cli(
        "dispersion",
        "--beta", "0.5", "--omega-min", "0", "--omega-max", "2", "--points", "9",
        "--figure", str(svg_path),
    ).stdout.decode()
    assert "omega_k,Omega_k" in out  # delimited output still emitted
    assert b'"-//W3C//DTD SVG 1.1//EN"' in svg_path.read_bytes()
    run_cli(
        "wavefunc", "--beta", "1", "--omega", "1", "--n", "0", "--points", "51",
        "--figure", str(png_path),
    )
    assert png_path.read_bytes().startswith(b"\x89PNG")


def test_verify_quick_passes():
    result = run_cli("verify", "--level", "quick")
    out = result.stdout.decode()
    assert out.count("PASS") == 12
    assert "FAIL" not in out
    assert "12/12 checks passed at level quick" in out


def test_usage_errors_exit_2():
    assert run_cli("spectrum", "--beta", "1", check=False).returncode == 2
    assert run_cli("nosuchcommand", check=False).returncode == 2
    assert run_cli(
        "melem", "--beta", "1", "--omega", "1", "--n", "1", "--nprime", "0",
        "--format", "svg", check=False,
    ).returncode == 2
    bad_domain = run_cli(
        "wavefunc", "--beta", "0", "--omega", "1", "--n", "0", "--points", "9",
        check=False,
    )
    assert bad_domain.returncode == 2
    assert b"usage:" in bad_domain.stderr


def test_intensity_single_row():
    out = run_cli(
        "intensity", "--wbar", "0", "--p12c-re", "0.6", "--p12s-re", "0.2"
    ).stdout.decode()
    _, rows = parse_table(out)
    assert len(rows) == 1
    assert float(rows[0][1]) == pytest.approx(1.0, rel=1e-12)
