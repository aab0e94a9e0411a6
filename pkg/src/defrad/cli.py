"""Command-line front end: curve emission, single-value queries, verification.

Every data subcommand builds one (params, columns, rows) table and hands it
to a single emitter, so the CSV, JSON and SVG routes cannot drift apart.
Output is deterministic: rerunning an invocation reproduces the bytes.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .melem import q_nm, selection_scan, tan_nm
from .oscillator import DeformedMode, EigenState, energy_level, eval_psi_p
from .radiation import (
    DispersionSign,
    TransitionAmplitudes,
    gcurve,
    intensity_ratio,
    photon_frequency,
)
from .reports import render_csv, render_json

__all__ = ["build_parser", "main"]

Table = tuple[dict[str, object], tuple[str, ...], list[tuple]]


@dataclass(frozen=True)
class FigureStyle:
    """How a table becomes a line figure: first column is the abscissa."""

    logx: bool = False
    logy: bool = False


def spectrum_table(beta: float, omega: float, hbar: float, nmax: int) -> Table:
    if nmax < 0:
        raise ValueError(f"nmax must be non-negative, got {nmax}")
    mode = DeformedMode(omega=omega, beta=beta, hbar=hbar)
    params = {
        "command": "spectrum",
        "beta": beta,
        "omega": omega,
        "hbar": hbar,
        "nmax": nmax,
    }
    rows = [(n, energy_level(mode, n)) for n in range(nmax + 1)]
    return params, ("n", "energy"), rows


def wavefunc_table(beta: float, omega: float, n: int, points: int) -> Table:
    if points < 2:
        raise ValueError(f"points must be at least 2, got {points}")
    if not beta > 0.0:
        raise ValueError("wavefunc needs beta > 0; beta = 0 has no finite momentum domain")
    state = EigenState(DeformedMode(omega=omega, beta=beta), n)
    pmax = math.pi / (2.0 * math.sqrt(beta))
    grid = np.linspace(-pmax, pmax, points)
    values = eval_psi_p(state, grid)
    params = {
        "command": "wavefunc",
        "beta": beta,
        "omega": omega,
        "n": n,
        "points": points,
    }
    rows = [(float(p), float(v)) for p, v in zip(grid, values)]
    return params, ("p", "psi"), rows


def melem_table(
    beta: float, omega: float, n: int, nprime: int, operator: str
) -> Table:
    mode = DeformedMode(omega=omega, beta=beta)
    params = {
        "command": "melem",
        "beta": beta,
        "omega": omega,
        "n": n,
        "nprime": nprime,
        "operator": operator,
    }
    columns = ("operator", "n", "nprime", "value_re", "value_im", "estimated_error")
    rows = []
    if operator in ("q", "both"):
        result = q_nm(mode, n, nprime)
        rows.append(
            ("q", n, nprime, result.value.real, result.value.imag, result.estimated_error)
        )
    if operator in ("tan", "both"):
        result = tan_nm(mode, n, nprime)
        rows.append(
            ("tan", n, nprime, result.value.real, result.value.imag, result.estimated_error)
        )
    return params, columns, rows


def scan_table(beta: float, omega: float, nmax: int) -> Table:
    scan = selection_scan(DeformedMode(omega=omega, beta=beta), nmax)
    params = {
        "command": "scan",
        "beta": beta,
        "omega": omega,
        "nmax": nmax,
        "threshold": scan.threshold,
        "q_nonzero_parity": scan.q_nonzero_parity,
        "tan_nonzero_parity": scan.tan_nonzero_parity,
    }
    columns = ("n", "nprime", "q_abs", "tan_abs", "q_vanishes", "tan_vanishes")
    rows = [
        (e.n, e.nprime, e.q_abs, e.tan_abs, e.q_vanishes, e.tan_vanishes)
        for e in scan.entries
    ]
    return params, columns, rows


def dispersion_table(
    beta: float, sign: str, omega_min: float, omega_max: float, points: int
) -> Table:
    if points < 2:
        raise ValueError(f"points must be at least 2, got {points}")
    if not omega_max > omega_min:
        raise ValueError("omega-max must exceed omega-min")
    convention = DispersionSign(sign)
    params = {
        "command": "dispersion",
        "beta": beta,
        "sign": sign,
        "omega_min": omega_min,
        "omega_max": omega_max,
        "points": points,
    }
    rows = [
        (float(w), photon_frequency(float(w), beta, sign=convention))
        for w in np.linspace(omega_min, omega_max, points)
    ]
    return params, ("omega_k", "Omega_k"), rows


def gcurve_table(
    wbar_min: float,
    wbar_max: float,
    points: int,
    log: bool = False,
    asymptote: bool = False,
) -> Table:
    curve = gcurve(wbar_min, wbar_max, points, log=log)
    params = {
        "command": "gcurve",
        "wbar_min": wbar_min,
        "wbar_max": wbar_max,
        "points": points,
        "grid": "log" if log else "linear",
    }
    if asymptote:
        columns = ("wbar", "g", "g_asymptote")
        rows = [(p.wbar, p.g, p.g_asymptote) for p in curve]
    else:
        columns = ("wbar", "g")
        rows = [(p.wbar, p.g) for p in curve]
    return params, columns, rows


def intensity_table(
    wbar: float, p12c_re: float, p12c_im: float, p12s_re: float, p12s_im: float
) -> Table:
    amplitudes = TransitionAmplitudes(
        p12_cos=complex(p12c_re, p12c_im),
        p12_sin=complex(p12s_re, p12s_im),
    )
    ratio = intensity_ratio(wbar, amplitudes)
    params = {
        "command": "intensity",
        "wbar": wbar,
        "p12c_re": p12c_re,
        "p12c_im": p12c_im,
        "p12s_re": p12s_re,
        "p12s_im": p12s_im,
    }
    return params, ("wbar", "intensity_ratio"), [(wbar, ratio)]


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _write_bytes(path: str | None, blob: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(blob)
        sys.stdout.flush()
    else:
        with open(path, "wb") as handle:
            handle.write(blob)


def _table_figure(columns, rows, style: FigureStyle):
    from . import plots

    x = [row[0] for row in rows]
    series = {
        name: [row[i] for row in rows] for i, name in enumerate(columns) if i > 0
    }
    return plots.line_figure(
        x,
        series,
        xlabel=columns[0],
        ylabel=columns[1],
        logx=style.logx,
        logy=style.logy,
    )


def _emit(args, table: Table, style: FigureStyle | None = None) -> int:
    params, columns, rows = table
    if args.format == "svg":
        from . import plots

        blob = plots.render_svg(_table_figure(columns, rows, style))
        _write_bytes(args.output, blob)
    elif args.format == "json":
        _write_text(args.output, render_json(params, columns, rows))
    else:
        _write_text(args.output, render_csv(params, columns, rows))
    figure_path = getattr(args, "figure", None)
    if figure_path:
        from . import plots

        plots.save_figure(_table_figure(columns, rows, style), figure_path)
    return 0


def cmd_spectrum(args) -> int:
    table = spectrum_table(args.beta, args.omega, args.hbar, args.nmax)
    return _emit(args, table, FigureStyle())


def cmd_wavefunc(args) -> int:
    table = wavefunc_table(args.beta, args.omega, args.n, args.points)
    return _emit(args, table, FigureStyle())


def cmd_melem(args) -> int:
    return _emit(args, melem_table(args.beta, args.omega, args.n, args.nprime, args.operator))


def cmd_scan(args) -> int:
    return _emit(args, scan_table(args.beta, args.omega, args.nmax))


def cmd_dispersion(args) -> int:
    table = dispersion_table(
        args.beta, args.sign, args.omega_min, args.omega_max, args.points
    )
    return _emit(args, table, FigureStyle())


def cmd_gcurve(args) -> int:
    table = gcurve_table(
        args.wbar_min, args.wbar_max, args.points, args.log, args.asymptote
    )
    return _emit(args, table, FigureStyle(logx=args.log))


def cmd_intensity(args) -> int:
    return _emit(
        args,
        intensity_table(
            args.wbar, args.p12c_re, args.p12c_im, args.p12s_re, args.p12s_im
        ),
    )


def cmd_verify(args) -> int:
    from . import acceptance

    results = acceptance.run_acceptance(args.level)
    for result in results:
        print(acceptance.format_result(result))
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed at level {args.level}")
    return 0 if passed == len(results) else 1


def _add_output_options(sub, formats=("csv", "json"), figure=False) -> None:
    sub.add_argument("--format", choices=formats, default="csv")
    sub.add_argument("--output", metavar="PATH", default=None,
                     help="write to PATH instead of standard output")
    if figure:
        sub.add_argument("--figure", metavar="PATH", default=None,
                         help="also render a figure to PATH (format by suffix)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="defrad",
        description="Deformed-oscillator spectra, matrix elements and radiation intensity.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    curve_formats = ("csv", "json", "svg")

    p = sub.add_parser("spectrum", help="energy levels of one deformed mode")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_options(p, curve_formats, figure=True)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("wavefunc", help="momentum-space eigenfunction on a uniform grid")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True)
    _add_output_options(p, curve_formats, figure=True)
    p.set_defaults(handler=cmd_wavefunc)

    p = sub.add_parser("melem", help="one matrix element of q or tan")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)
    p.add_argument("--operator", choices=("q", "tan", "both"), default="both")
    _add_output_options(p)
    p.set_defaults(handler=cmd_melem)

    p = sub.add_parser("scan", help="selection-rule scan over index pairs")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_options(p)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("dispersion", help="photon frequency vs mode frequency")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--sign", choices=("plus", "minus"), default="plus")
    p.add_argument("--omega-min", type=float, required=True)
    p.add_argument("--omega-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    _add_output_options(p, curve_formats, figure=True)
    p.set_defaults(handler=cmd_dispersion)

    p = sub.add_parser("gcurve", help="deformed/undeformed intensity ratio curve")
    p.add_argument("--wbar-min", type=float, required=True)
    p.add_argument("--wbar-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--log", action="store_true", help="log-spaced grid")
    p.add_argument("--asymptote", action="store_true",
                   help="add the strong-deformation asymptote column")
    _add_output_options(p, curve_formats, figure=True)
    p.set_defaults(handler=cmd_gcurve)

    p = sub.add_parser("intensity", help="intensity ratio for given transition amplitudes")
    p.add_argument("--wbar", type=float, required=True)
    p.add_argument("--p12c-re", type=float, required=True)
    p.add_argument("--p12c-im", type=float, default=0.0)
    p.add_argument("--p12s-re", type=float, default=0.0)
    p.add_argument("--p12s-im", type=float, default=0.0)
    _add_output_options(p)
    p.set_defaults(handler=cmd_intensity)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--level", choices=("quick", "full"), default="full")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        parser.error(str(exc))
