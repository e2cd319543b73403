"""
CSV, JSON and SVG output for the command line.

CSV cells carry 17 significant digits so a curve written here reads back
bit-exact; an undefined value is an empty cell.
"""
import csv
import json
import sys
from typing import Any, Iterable, List, Optional, Sequence, TextIO, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from pydantic import BaseModel  # noqa: E402

import config  # noqa: E402
from errors import InsufficientDataError, LiteralParseError  # noqa: E402
from grid_function import GridFunction  # noqa: E402

# uniform spacing check for z,value grids read from disk
_SPACING_RTOL = 1e-9


def format_cell(value: Optional[float]) -> str:
    if value is None:
        return ""
    return format(float(value), config.CSV_FLOAT_FORMAT)


def write_csv(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[Optional[float]]]):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])


def save_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Optional[float]]]):
    with open(path, "w", newline="") as stream:
        write_csv(stream, header, rows)
    print(f"[CLI] wrote {path}", file=sys.stderr)


def read_columns(path: str, count: int = 2) -> Tuple[np.ndarray, ...]:
    """
    First `count` columns of a CSV with a header row; empty cells read as NaN.

    Raises:
        LiteralParseError: if a row is short or a cell is not a number
    """
    columns: List[List[float]] = [[] for _ in range(count)]
    with open(path, newline="") as stream:
        reader = csv.reader(stream)
        next(reader, None)
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) < count:
                raise LiteralParseError(f"{path}:{line}: expected {count} columns, got {len(row)}")
            try:
                for column, cell in zip(columns, row):
                    column.append(float(cell) if cell.strip() else np.nan)
            except ValueError:
                raise LiteralParseError(f"{path}:{line}: non-numeric cell in {row!r}")
    return tuple(np.array(column, dtype=float) for column in columns)


def read_grid(path: str) -> GridFunction:
    """A z,value CSV on uniformly spaced nodes."""
    z, values = read_columns(path, 2)
    if z.size < 2:
        raise InsufficientDataError(f"insufficient data: {path} has {z.size} rows")
    steps = np.diff(z)
    if not np.allclose(steps, steps[0], rtol=_SPACING_RTOL, atol=0) or steps[0] <= 0:
        raise LiteralParseError(f"{path}: z must be increasing and uniformly spaced")
    return GridFunction(z_lo=float(z[0]), z_hi=float(z[-1]), values=values)


def _plain(value: Any):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


def envelope(kind: str, payload: Any) -> dict:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump()
    return {"schema": config.SCHEMA_VERSION, "kind": kind, **payload}


def dump_json(document: dict, stream: Optional[TextIO] = None):
    stream = stream or sys.stdout
    # infinities are written as the Infinity / -Infinity constants
    json.dump(document, stream, indent=2, default=_plain)
    stream.write("\n")


def emit_svg(curve: Sequence[Tuple[float, float]], path: str, xlabel: str = "t", ylabel: str = "F(t)"):
    """Static line plot with axes and tick labels; identical input gives identical bytes."""
    if len(curve) < 2:
        raise InsufficientDataError("insufficient data: a plot needs at least 2 points")
    ts, vs = zip(*curve)
    with plt.rc_context({"svg.hashsalt": config.SVG_HASHSALT, "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(ts, vs, color="C0", linewidth=1.5)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    print(f"[CLI] wrote {path}", file=sys.stderr)
