"""Delimited emission of sweep tables: CSV with a metadata block, or JSON.

Floating values are printed with 9 significant digits, locale-independent,
`.` decimal separator. Identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
import sys

CSV_HEADER = "sweep_value,distance_m,n_tx,n_rx,edof_exact,edof_closed,cap_edof,cap_closed,cap_oracle,rank_r"
ROW_FIELDS = tuple(CSV_HEADER.split(","))


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


def _printed(v):
    """Collapse a float to the 9-significant-digit value actually printed,
    so JSON round-trips the emitted precision exactly."""
    if isinstance(v, float):
        return float(f"{v:.9g}")
    return v


def format_csv(rows, metadata) -> str:
    lines = [f"# {k}={_fmt(v)}" for k, v in metadata.items()]
    lines.append(CSV_HEADER)
    for row in rows:
        lines.append(",".join(_fmt(getattr(row, f)) for f in ROW_FIELDS))
    return "\n".join(lines) + "\n"


def format_json(rows, metadata) -> str:
    meta = {k: _printed(v) for k, v in metadata.items()}
    out_rows = [
        {f: _printed(getattr(row, f)) for f in ROW_FIELDS + ("rayleigh_m",)} for row in rows
    ]
    return json.dumps({"metadata": meta, "rows": out_rows}, indent=2) + "\n"


def emit(rows, fmt: str, path, metadata) -> None:
    """Write rows in the given format to path, or to stdout when path is None."""
    if fmt == "csv":
        text = format_csv(rows, metadata)
    elif fmt == "json":
        text = format_json(rows, metadata)
    else:
        raise ValueError(f"format must be 'csv' or 'json' (got {fmt!r})")
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
