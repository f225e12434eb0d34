"""CSV ingestion, surrogate serialization, run manifests.

All files are UTF-8, comma separated, '\\n' line endings. Floats are
written with ``repr`` (shortest round-trip form), so reading a file back
reproduces the exact doubles.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .errors import AllMissing, ColumnNotFound, InvalidConfig, LengthMismatch, MissingData, ParseError
from .types import TimeSeries, validate_series

MISSING_TOKENS = {"", "na", "nan", "null", "none"}
MISSING_POLICIES = ("error", "linear_interpolate")
SURROGATE_FILE = "surrogates.csv"
MANIFEST_FILE = "manifest.txt"


def fmt(x) -> str:
    return repr(float(x))


def _parse(cell):
    """float, or None for a missing cell; raises ValueError otherwise."""
    text = cell.strip()
    if text.lower() in MISSING_TOKENS:
        return None
    return float(text)


def _looks_like_header(row) -> bool:
    for cell in row:
        try:
            _parse(cell)
        except ValueError:
            return True
    return False


def _resolve_column(column, header, ncols):
    if column is None:
        return ncols - 1
    if isinstance(column, str):
        if header is not None and column in header:
            return header.index(column)
        try:
            column = int(column)
        except ValueError:
            raise ColumnNotFound(column) from None
    if not -ncols <= column < ncols:
        raise ColumnNotFound(column)
    return column % ncols


def read_series_csv(path, column=None, missing_policy="error", header=None) -> TimeSeries:
    """Read one numeric column of a CSV file into a TimeSeries.

    Parameters
    ----------
    path : str or Path
    column : str, int or None
        Header name or zero-based index. ``None`` picks the last column.
    missing_policy : {"error", "linear_interpolate"}
        Blank cells and NA/NaN/null tokens are missing. Interpolation is
        linear between the nearest finite neighbours; leading and trailing
        gaps take the nearest finite value.
    header : bool or None
        ``None`` treats the first row as a header when any of its cells is
        not a number.

    Rows in error messages are zero-based data rows (header excluded).
    """
    if missing_policy not in MISSING_POLICIES:
        raise InvalidConfig(f"missing_policy must be one of {MISSING_POLICIES}")
    text = Path(path).read_text(encoding="utf-8")
    rows = list(csv.reader(io.StringIO(text)))
    while rows and not rows[-1]:
        rows.pop()
    if not rows:
        raise AllMissing()
    if header is None:
        header = _looks_like_header(rows[0])
    names = [c.strip() for c in rows[0]] if header else None
    data = rows[1:] if header else rows
    ncols = max([len(r) for r in data] + [len(names) if names else 1])
    idx = _resolve_column(column, names, ncols)

    values = np.empty(len(data))
    for i, row in enumerate(data):
        cell = row[idx] if idx < len(row) else ""
        try:
            v = _parse(cell)
        except ValueError:
            raise ParseError(i, cell) from None
        if v is None:
            if missing_policy == "error":
                raise MissingData(i)
            v = np.nan
        values[i] = v
    known = ~np.isnan(values)
    if not known.any():
        raise AllMissing()
    if not known.all():
        positions = np.arange(values.size)
        values = np.interp(positions, positions[known], values[known])
    return validate_series(values)


def write_surrogates(path, values, fmt_name="wide"):
    """Write a ``(count, N)`` array.

    ``wide``: ``index,sample_0,...``, one row per time index.
    ``long``: ``sample_id,index,value``, one row per sample.
    """
    values = np.atleast_2d(np.asarray(values, dtype=float))
    count, n = values.shape
    lines = []
    if fmt_name == "wide":
        lines.append(",".join(["index"] + [f"sample_{i}" for i in range(count)]))
        for k in range(n):
            lines.append(",".join([str(k)] + [fmt(v) for v in values[:, k]]))
    elif fmt_name == "long":
        lines.append("sample_id,index,value")
        for i in range(count):
            lines.extend(f"{i},{k},{fmt(v)}" for k, v in enumerate(values[i]))
    else:
        raise InvalidConfig(f"unknown format {fmt_name!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def read_surrogates(path) -> np.ndarray:
    """Read a wide or long surrogate file back into a ``(count, N)`` array."""
    path = Path(path)
    if path.is_dir():
        path = path / SURROGATE_FILE
    rows = list(csv.reader(io.StringIO(path.read_text(encoding="utf-8"))))
    rows = [r for r in rows if r]
    if not rows:
        raise AllMissing()
    head = [c.strip() for c in rows[0]]
    try:
        if head == ["sample_id", "index", "value"]:
            table = {}
            for r in rows[1:]:
                table.setdefault(int(r[0]), {})[int(r[1])] = float(r[2])
            ids = sorted(table)
            lengths = {len(table[i]) for i in ids}
            if len(lengths) != 1:
                raise LengthMismatch(min(lengths), max(lengths))
            n = lengths.pop()
            return np.array([[table[i][k] for k in range(n)] for i in ids])
        body = np.array([[float(c) for c in r] for r in rows[1:]])
    except (ValueError, IndexError, KeyError) as err:
        raise ParseError(-1, str(err)) from None
    if head and head[0] == "index":
        body = body[:, 1:]
    return body.T.copy()


def sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def run_hash(input_sha256, flags: dict) -> str:
    """Digest of the input bytes and the flags that shape the output."""
    payload = json.dumps({"input": input_sha256, "flags": flags}, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()


def write_manifest(out_dir, entries: dict, timestamp=None):
    """Flat ``key=value`` manifest; one per output directory."""
    stamp = timestamp or datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    lines = [f"{k}={v}" for k, v in entries.items()] + [f"timestamp={stamp}"]
    path = Path(out_dir) / MANIFEST_FILE
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path


def read_manifest(path) -> dict:
    path = Path(path)
    if path.is_dir():
        path = path / MANIFEST_FILE
    out = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if "=" in line:
            k, v = line.split("=", 1)
            out[k] = v
    return out
