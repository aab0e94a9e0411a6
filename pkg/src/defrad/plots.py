"""Matplotlib rendering for the curve subcommands.

Figures are built with the object-oriented API only (no pyplot, no global
state), so rendering works headless and repeat invocations stay
byte-identical: the SVG id hash salt is pinned and the date metadata is
stripped.
"""

from __future__ import annotations

import io
from typing import Mapping, Sequence

import matplotlib
from matplotlib.figure import Figure

__all__ = ["line_figure", "render_svg", "save_figure"]

_SVG_RC = {"svg.hashsalt": "defrad", "svg.fonttype": "path"}


def line_figure(
    x: Sequence[float],
    series: Mapping[str, Sequence[float]],
    xlabel: str,
    ylabel: str,
    title: str | None = None,
    logx: bool = False,
    logy: bool = False,
) -> Figure:
    """One set of shared-abscissa line plots, legend keyed by series name."""
    if not series:
        raise ValueError("at least one series is required")
    fig = Figure(figsize=(6.4, 4.8), dpi=100)
    ax = fig.subplots()
    for label, values in series.items():
        ax.plot(x, values, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    if logx:
        ax.set_xscale("log")
    if logy:
        ax.set_yscale("log")
    if len(series) > 1:
        ax.legend()
    ax.grid(True, alpha=0.3)
    return fig


def render_svg(fig: Figure) -> bytes:
    """Serialize a figure as a deterministic standalone SVG 1.1 document."""
    buffer = io.BytesIO()
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def save_figure(fig: Figure, path: str) -> None:
    """Write a figure to path, with the deterministic route for .svg files."""
    if path.lower().endswith(".svg"):
        with open(path, "wb") as handle:
            handle.write(render_svg(fig))
    else:
        fig.savefig(path)
