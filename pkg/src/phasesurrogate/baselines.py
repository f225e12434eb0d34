"""ARMA(p, q) simulation and Yule-Walker AR(p) fitting for baseline batches."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, solve_toeplitz
from scipy.signal import lfilter

from .errors import ConstantSeries, InvalidConfig, SingularSystem, TooShort
from .generator import surrogate_rng
from .types import TimeSeries, validate_series


@dataclass(frozen=True)
class ArmaModel:
    """y_t = c + sum phi_i y_{t-i} + sum theta_j eps_{t-j} + eps_t, eps ~ N(0, noise_sd^2)."""

    c: float
    ar_coeffs: tuple = ()
    ma_coeffs: tuple = ()
    noise_sd: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "ar_coeffs", tuple(float(v) for v in self.ar_coeffs))
        object.__setattr__(self, "ma_coeffs", tuple(float(v) for v in self.ma_coeffs))
        if self.p + self.q < 1:
            raise InvalidConfig("ARMA model needs p + q >= 1")
        if not (np.isfinite(self.noise_sd) and self.noise_sd > 0):
            raise InvalidConfig("noise_sd must be positive")

    @property
    def p(self):
        return len(self.ar_coeffs)

    @property
    def q(self):
        return len(self.ma_coeffs)

    @property
    def burn_in(self):
        return max(200, 10 * (self.p + self.q))

    def describe(self):
        phis = ", ".join(f"phi_{i + 1}={v:.4f}" for i, v in enumerate(self.ar_coeffs))
        thetas = ", ".join(f"theta_{j + 1}={v:.4f}" for j, v in enumerate(self.ma_coeffs))
        parts = [f"c={self.c:.6g}", phis, thetas, f"noise_sd={self.noise_sd:.6g}"]
        return ", ".join(p for p in parts if p)


def arma_generate(model: ArmaModel, n: int, rng: np.random.Generator) -> TimeSeries:
    """Simulate ``n`` samples after a discarded burn-in of max(200, 10(p+q)).

    The recursion starts from zero history. Non-stationary coefficients are
    not rejected and can produce exploding output.
    """
    if int(n) != n or n < 2:
        raise TooShort(n)
    total = model.burn_in + int(n)
    eps = rng.normal(0.0, model.noise_sd, size=total)
    drive = model.c + lfilter(np.r_[1.0, model.ma_coeffs], [1.0], eps)
    y = lfilter([1.0], np.r_[1.0, -np.asarray(model.ar_coeffs)], drive)
    return validate_series(y[model.burn_in :])


def fit_ar_yule_walker(s, p: int) -> ArmaModel:
    """AR(p) fit from the biased sample autocovariance.

    ``c`` is set so the process mean equals the sample mean; ``noise_sd``
    comes from the Yule-Walker residual variance.
    """
    x = s.values if isinstance(s, TimeSeries) else validate_series(s).values
    n = x.size
    if int(p) != p or not 1 <= p < n / 2:
        raise InvalidConfig(f"AR order must satisfy 1 <= p < N/2, got p={p} with N={n}")
    if np.all(x == x[0]):
        raise ConstantSeries()
    mu = float(x.mean())
    dev = x - mu
    gamma = np.array([np.dot(dev[: n - k], dev[k:]) / n for k in range(p + 1)])
    try:
        phi = solve_toeplitz(gamma[:p], gamma[1 : p + 1])
    except LinAlgError as err:
        raise SingularSystem(str(err)) from None
    if not np.all(np.isfinite(phi)):
        raise SingularSystem("non-finite Yule-Walker solution")
    sigma2 = float(gamma[0] - np.dot(phi, gamma[1 : p + 1]))
    if not sigma2 > 0:
        raise SingularSystem(f"non-positive residual variance {sigma2:.3e}")
    return ArmaModel(c=mu * (1.0 - float(np.sum(phi))), ar_coeffs=tuple(phi), noise_sd=float(np.sqrt(sigma2)))


def arma_batch(model: ArmaModel, n: int, count: int, seed: int) -> list:
    """``count`` series of length ``n``, series ``i`` seeded like surrogate ``i``."""
    return [arma_generate(model, n, surrogate_rng(seed, i)) for i in range(count)]
