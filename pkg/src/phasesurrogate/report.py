"""Tables, ACF and histogram CSVs for comparison reports."""
from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from .errors import ConstantSeries
from .io import fmt
from .stats import acf

log = logging.getLogger(__name__)

ROWS = (
    ("Mean", "mean"),
    ("SD", "sd"),
    ("Skewness", "skewness"),
    ("Kurtosis", "kurtosis"),
    ("DTW", "dtw"),
    ("WD", "wd"),
)


def _num(v, zero_below=0.0):
    if abs(v) <= zero_below:
        return "0"
    return f"{v:.4g}"


def format_pm(avg, sd):
    """``"avg ± sd"`` with 4 significant digits; spreads at roundoff level print as 0."""
    tiny = 1e-9 * max(1.0, abs(avg))
    return f"{_num(avg, 1e-12)} ± {_num(sd, tiny)}"


def _write(path, lines):
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _original(report, key):
    if report.source is None or key in ("dtw", "wd"):
        return None
    return getattr(report.source, key)


def table_csv_lines(reports):
    """One row per statistic: display string, average and SD for each report."""
    head = ["statistic", "original"]
    for r in reports:
        head += [r.label, f"{r.label}_avg", f"{r.label}_sd"]
    lines = [",".join(_quote(h) for h in head)]
    for name, key in ROWS:
        orig = _original(reports[0], key)
        cells = [name, "-" if orig is None else fmt(orig)]
        for r in reports:
            avg, sd = r.aggregates[key]
            cells += [format_pm(avg, sd), fmt(avg), fmt(sd)]
        lines.append(",".join(_quote(c) for c in cells))
    return lines


def _quote(cell):
    return f'"{cell}"' if "," in cell or '"' in cell else cell


def table_md_lines(reports, title=None):
    lines = []
    if title:
        lines += [f"**{title}**", ""]
    lines.append("| | Original | " + " | ".join(r.label for r in reports) + " |")
    lines.append("|---" * (len(reports) + 2) + "|")
    for name, key in ROWS:
        orig = _original(reports[0], key)
        cells = [name, "-" if orig is None else f"{orig:.4g}"]
        cells += [format_pm(*r.aggregates[key]) for r in reports]
        lines.append("| " + " | ".join(cells) + " |")
    lines += ["", f"Values are averages over {reports[0].batch_size} series ± SD."]
    for r in reports:
        lines += [f"{r.label}: {note}" for note in r.notes]
    return lines


def write_table_csv(path, reports):
    _write(path, table_csv_lines(reports))


def write_table_md(path, reports, title=None):
    _write(path, table_md_lines(reports, title))


def write_acf_csv(path, series: dict, max_lag=10):
    """``series_id,lag,acf,ci_low,ci_high`` rows; constant series are skipped."""
    lines = ["series_id,lag,acf,ci_low,ci_high"]
    for sid, values in series.items():
        try:
            res = acf(values, max_lag)
        except ConstantSeries:
            log.warning("skipping ACF of constant series %s", sid)
            continue
        for lag, r in zip(res.lags, res.values):
            lines.append(f"{sid},{lag},{fmt(r)},{fmt(res.ci_low)},{fmt(res.ci_high)}")
    _write(path, lines)


def shared_bin_edges(series: dict, bins=30) -> np.ndarray:
    pooled = np.concatenate([np.asarray(v, dtype=float) for v in series.values()])
    return np.histogram_bin_edges(pooled, bins=bins)


def write_hist_csv(path, series: dict, bins=30):
    """Histogram counts for every series over one shared set of bin edges."""
    edges = shared_bin_edges(series, bins)
    lines = ["series_id,bin_left,bin_right,count"]
    for sid, values in series.items():
        counts, _ = np.histogram(np.asarray(values, dtype=float), bins=edges)
        for left, right, c in zip(edges[:-1], edges[1:], counts):
            lines.append(f"{sid},{fmt(left)},{fmt(right)},{int(c)}")
    _write(path, lines)
    return edges


def msweep_csv_lines(reports_by_m: dict):
    head = ["m"]
    for _, key in ROWS:
        head += [key, f"{key}_sd"]
    lines = [",".join(head)]
    for m, r in reports_by_m.items():
        cells = [str(m)]
        for _, key in ROWS:
            avg, sd = r.aggregates[key]
            cells += [fmt(avg), fmt(sd)]
        lines.append(",".join(cells))
    return lines


def msweep_md_lines(reports_by_m: dict):
    first = next(iter(reports_by_m.values()))
    src = first.source
    lines = ["| | " + " | ".join(name for name, _ in ROWS) + " |", "|---" * (len(ROWS) + 1) + "|"]
    orig = [f"{getattr(src, key):.4g}" if key not in ("dtw", "wd") else "-" for _, key in ROWS]
    lines.append("| Original | " + " | ".join(orig) + " |")
    for m, r in reports_by_m.items():
        cells = [format_pm(*r.aggregates[key]) for _, key in ROWS]
        lines.append(f"| m={m} | " + " | ".join(cells) + " |")
    lines += ["", f"Values are averages over {first.batch_size} surrogates per m ± SD."]
    return lines
