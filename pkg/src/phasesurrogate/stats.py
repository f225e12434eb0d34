"""Moments and autocorrelation estimators.

Variance uses divisor N throughout; kurtosis is excess (normal -> 0).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dft import forward_dft, inverse_dft
from .errors import ConstantSeries, LagOutOfRange
from .types import Spectrum, SummaryStats, TimeSeries, validate_series


def _values(s) -> np.ndarray:
    return s.values if isinstance(s, TimeSeries) else validate_series(s).values


def summary_stats(s) -> SummaryStats:
    x = _values(s)
    if np.all(x == x[0]):
        # all samples equal: report exact zeros rather than roundoff or NaN
        return SummaryStats(mean=float(x[0]), sd=0.0, skewness=0.0, kurtosis=0.0)
    mean = float(np.mean(x))
    dev = x - mean
    # scale first so tiny deviations do not underflow when squared
    scale = float(np.max(np.abs(dev)))
    if scale == 0.0:
        return SummaryStats(mean=mean, sd=0.0, skewness=0.0, kurtosis=0.0)
    d = dev / scale
    unit_sd = float(np.sqrt(np.mean(d**2)))
    sd = scale * unit_sd
    z = d / unit_sd
    return SummaryStats(
        mean=mean,
        sd=sd,
        skewness=float(np.mean(z**3)),
        kurtosis=float(np.mean(z**4) - 3.0),
    )


def circular_autocorr(s) -> np.ndarray:
    """Inverse DFT of |zeta|^2, i.e. sum_k s_k s_{(k+tau) mod N} for each lag tau.

    Not mean-removed or normalized; this is the quantity phase
    randomization leaves unchanged.
    """
    spec = forward_dft(s)
    power = Spectrum(spec.amplitudes**2, np.zeros(spec.n), real_symmetric=True)
    return np.array(inverse_dft(power).values)


@dataclass(frozen=True, eq=False)
class AcfResult:
    lags: np.ndarray
    values: np.ndarray
    n: int

    @property
    def band(self) -> float:
        """Half-width of the 95% white-noise band, 1.96/sqrt(N)."""
        return 1.96 / np.sqrt(self.n)

    @property
    def ci_low(self):
        return -self.band

    @property
    def ci_high(self):
        return self.band


def acf(s, max_lag: int = 10) -> AcfResult:
    """Sample ACF r_tau = sum (s_k - mu)(s_{k+tau} - mu) / sum (s_k - mu)^2, tau = 0..max_lag."""
    x = _values(s)
    n = x.size
    if int(max_lag) != max_lag or not 1 <= max_lag < n:
        raise LagOutOfRange(max_lag, n)
    if np.all(x == x[0]):
        raise ConstantSeries()
    dev = x - x.mean()
    denom = float(np.dot(dev, dev))
    r = np.array([np.dot(dev[: n - t], dev[t:]) / denom for t in range(max_lag + 1)])
    r[0] = 1.0
    return AcfResult(lags=np.arange(max_lag + 1), values=r, n=n)
