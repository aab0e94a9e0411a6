"""Delimited and structured serialization of result tables.

Every emitter in the command-line layer funnels through these two renderers,
so determinism and round-trip rules live in one place: reals carry 17
significant digits (re-parsing reproduces the binary value exactly), lines end
with LF, and parameter provenance rides along as comments or a params object.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping, Sequence

__all__ = [
    "format_value",
    "parse_csv",
    "render_csv",
    "render_json",
]


def format_value(value) -> str:
    """Serialize one cell: shortest-exact reals, plain integers and strings."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return "%.17g" % value
    if isinstance(value, str):
        return value
    raise TypeError(f"unsupported cell type {type(value).__name__!r}")


def render_csv(
    params: Mapping[str, object],
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> str:
    """Comma-delimited table with `#` comment lines carrying the parameters."""
    lines = [f"# {key} = {format_value(value)}" for key, value in params.items()]
    lines.append(",".join(columns))
    for row in rows:
        cells = [format_value(cell) for cell in row]
        if len(cells) != len(columns):
            raise ValueError(
                f"row width {len(cells)} does not match {len(columns)} columns"
            )
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_json(
    params: Mapping[str, object],
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> str:
    """JSON mirror of the CSV table: a params object plus row objects.

    Non-finite reals become null; JSON has no spelling for them.
    """
    row_objects = []
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(
                f"row width {len(row)} does not match {len(columns)} columns"
            )
        row_objects.append(
            {col: _json_safe(cell) for col, cell in zip(columns, row)}
        )
    document = {
        "params": {key: _json_safe(value) for key, value in params.items()},
        "rows": row_objects,
    }
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def parse_csv(text: str) -> tuple[dict[str, str], list[str], list[list[str]]]:
    """Inverse of render_csv, with cells left as strings.

    Returns (params, columns, rows). Comment lines must look like
    `# key = value`; the first non-comment line is the header.
    """
    params: dict[str, str] = {}
    columns: list[str] = []
    rows: list[list[str]] = []
    for line in text.splitlines():
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            if not sep:
                raise ValueError(f"malformed comment line: {line!r}")
            params[key.strip()] = value.strip()
        elif not columns:
            columns = line.split(",")
        else:
            cells = line.split(",")
            if len(cells) != len(columns):
                raise ValueError(f"row width mismatch on line: {line!r}")
            rows.append(cells)
    if not columns:
        raise ValueError("no header line found")
    return params, columns, rows
