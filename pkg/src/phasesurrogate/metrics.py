"""Distances between a surrogate and its source: DTW and Wasserstein-1."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import EmptySeries
from .stats import summary_stats
from .types import QUANTITIES, ComparisonReport, TimeSeries


def _array(x) -> np.ndarray:
    a = np.asarray(x.values if isinstance(x, TimeSeries) else x, dtype=float).ravel()
    if a.size == 0:
        raise EmptySeries()
    return a


def dtw(x, y) -> float:
    """sqrt of the minimal summed squared difference over warping paths.

    Paths start at (0, 0), end at (n-1, m-1) and move by (1, 0), (0, 1)
    or (1, 1). The recursion runs over anti-diagonals i + j = d so each
    diagonal is one vectorized update. Accepts any non-empty sequences.
    """
    x = _array(x)
    y = _array(y)
    if x.size < y.size:
        x, y = y, x
    n, m = x.size, y.size
    y_rev = y[::-1]
    # diag[i] holds D[i, d - i] on the padded (n+1) x (m+1) grid; D[0, 0] = 0
    prev2 = np.full(n + 1, np.inf)
    prev2[0] = 0.0
    prev1 = np.full(n + 1, np.inf)
    for d in range(2, n + m + 1):
        cur = np.full(n + 1, np.inf)
        lo = max(1, d - m)
        hi = min(n, d - 1)
        # cell (i, j = d - i) compares x[i-1] with y[j-1] = y_rev[m - d + i]
        diff = x[lo - 1 : hi] - y_rev[m - d + lo : m - d + hi + 1]
        best = np.minimum(np.minimum(prev2[lo - 1 : hi], prev1[lo - 1 : hi]), prev1[lo : hi + 1])
        cur[lo : hi + 1] = diff * diff + best
        prev2, prev1 = prev1, cur
    return float(np.sqrt(prev1[n]))


def wasserstein1(x, y) -> float:
    """W1 between the empirical distributions of two samples.

    Equal lengths: mean |sorted(x) - sorted(y)|. Otherwise the integral of
    |F_x - F_y| over the merged support, which equals the quantile-function
    integral for piecewise-constant CDFs.
    """
    x = np.sort(_array(x))
    y = np.sort(_array(y))
    if x.size == y.size:
        return float(np.mean(np.abs(x - y)))
    support = np.concatenate([x, y])
    support.sort(kind="mergesort")
    widths = np.diff(support)
    cdf_x = np.searchsorted(x, support[:-1], side="right") / x.size
    cdf_y = np.searchsorted(y, support[:-1], side="right") / y.size
    return float(np.sum(np.abs(cdf_x - cdf_y) * widths))


def _aggregate(values):
    a = np.asarray(values, dtype=float)
    # divisor N, as in the stats module
    return float(np.mean(a)), float(np.std(a))


def compare_series(series, source) -> dict:
    """Moments of ``series`` plus its DTW and W1 distance to ``source``."""
    row = summary_stats(series).as_dict()
    row["dtw"] = dtw(series, source)
    row["wd"] = wasserstein1(series, source)
    return row


def batch_metrics(batch, source, label="Fourier", workers: int = 1, notes=()) -> ComparisonReport:
    """Average and SD over the batch of each moment and of DTW/W1 to ``source``.

    ``batch`` is a SurrogateBatch or any iterable of series.
    """
    members = list(batch)
    if not members:
        raise EmptySeries()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda s: compare_series(s, source), members))
    else:
        rows = [compare_series(s, source) for s in members]
    aggregates = {q: _aggregate([r[q] for r in rows]) for q in QUANTITIES}
    return ComparisonReport(
        label=label,
        batch_size=len(members),
        aggregates=aggregates,
        source=summary_stats(source),
        notes=tuple(notes),
    )
