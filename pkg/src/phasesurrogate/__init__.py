"""Fourier phase-randomized surrogate time series with similarity control."""
__version__ = "0.1.0"

from .baselines import ArmaModel, arma_generate, fit_ar_yule_walker
from .dft import forward_dft, inverse_dft, parseval_gap
from .generator import (
    SurrogateBatch,
    generate_batch,
    generate_nonneg,
    generate_one,
    randomize_phases,
    surrogate_rng,
)
from .metrics import batch_metrics, dtw, wasserstein1
from .stats import acf, circular_autocorr, summary_stats
from .types import ComparisonReport, GeneratorConfig, Spectrum, SummaryStats, TimeSeries, validate_series

__all__ = [
    "ArmaModel",
    "ComparisonReport",
    "GeneratorConfig",
    "Spectrum",
    "SummaryStats",
    "SurrogateBatch",
    "TimeSeries",
    "acf",
    "arma_generate",
    "batch_metrics",
    "circular_autocorr",
    "dtw",
    "fit_ar_yule_walker",
    "forward_dft",
    "generate_batch",
    "generate_nonneg",
    "generate_one",
    "inverse_dft",
    "parseval_gap",
    "randomize_phases",
    "summary_stats",
    "surrogate_rng",
    "validate_series",
    "wasserstein1",
]
