"""Seeded synthetic test signals used by the fixtures, scripts and tests."""
import numpy as np

from .baselines import ArmaModel, arma_generate
from .types import TimeSeries, validate_series


def ar1_signal(n=745, phi=0.8, seed=0, c=0.0, noise_sd=1.0) -> TimeSeries:
    """Stationary Gaussian AR(1) series."""
    model = ArmaModel(c=c, ar_coeffs=(phi,), noise_sd=noise_sd)
    return arma_generate(model, n, np.random.default_rng(seed))


def no_like_signal(n=365, seed=0, phi=0.6) -> TimeSeries:
    """Positive, right-skewed series with mean roughly equal to its SD.

    exp of a unit-variance AR(1) scaled so the log-variance is ln 2, which
    gives a lognormal marginal with coefficient of variation 1.
    """
    rng = np.random.default_rng(seed)
    z = arma_generate(ArmaModel(c=0.0, ar_coeffs=(phi,), noise_sd=np.sqrt(1 - phi**2)), n, rng).values
    sigma = np.sqrt(np.log(2.0))
    return validate_series(0.5 * np.exp(sigma * z - sigma**2 / 2))
