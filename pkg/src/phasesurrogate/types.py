"""Shared domain types."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvalidConfig, MOutOfRange, NonFinite, NotRealSymmetric, TooShort

REPAIR_MODES = ("none", "resample", "clamp")
QUANTITIES = ("mean", "sd", "skewness", "kurtosis", "dtw", "wd")

# Symmetry and residue checks share this scale: tol = SYMMETRY_RTOL * (1 + max amplitude).
SYMMETRY_RTOL = 1e-9


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Uniformly sampled real series, at least two finite samples long.

    ``units`` is carried for display only.
    """

    values: np.ndarray
    units: Optional[str] = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1:
            v = v.ravel()
        if v.size < 2:
            raise TooShort(v.size)
        bad = np.flatnonzero(~np.isfinite(v))
        if bad.size:
            raise NonFinite(int(bad[0]))
        object.__setattr__(self, "values", _frozen(v))

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self):
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __repr__(self):
        return f"TimeSeries(N={self.n})"


def validate_series(raw, units=None) -> TimeSeries:
    """Build a TimeSeries, raising TooShort or NonFinite on bad input."""
    return TimeSeries(raw, units=units)


def canonical_phase(theta):
    """Map angles into (-pi, pi], sending -pi to +pi."""
    theta = np.asarray(theta, dtype=float)
    inside = (theta > -np.pi) & (theta <= np.pi)
    t = np.mod(theta + np.pi, 2 * np.pi) - np.pi
    t = np.where(t <= -np.pi, np.pi, t)
    # in-range values pass through bit-exact
    return np.where(inside, theta, t)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """DFT coefficients in polar form.

    ``amplitudes`` are non-negative, ``phases`` lie in (-pi, pi]. A spectrum
    flagged ``real_symmetric`` is checked for conjugate symmetry on
    construction and is the only kind accepted by the inverse transform.
    """

    amplitudes: np.ndarray
    phases: np.ndarray
    real_symmetric: bool = False

    def __post_init__(self):
        rho = np.asarray(self.amplitudes, dtype=float).ravel()
        theta = np.asarray(self.phases, dtype=float).ravel()
        if rho.size != theta.size:
            raise InvalidConfig(f"{rho.size} amplitudes but {theta.size} phases")
        if rho.size == 0:
            raise InvalidConfig("empty spectrum")
        if not (np.all(np.isfinite(rho)) and np.all(np.isfinite(theta))):
            raise InvalidConfig("spectrum contains non-finite values")
        if np.any(rho < 0):
            raise InvalidConfig("amplitudes must be non-negative")
        if np.any(theta <= -np.pi) or np.any(theta > np.pi):
            raise InvalidConfig("phases must lie in (-pi, pi]")
        object.__setattr__(self, "amplitudes", _frozen(rho))
        object.__setattr__(self, "phases", _frozen(theta))
        if self.real_symmetric:
            self._check_symmetry()

    @property
    def n(self) -> int:
        return self.amplitudes.size

    def __len__(self):
        return self.amplitudes.size

    def to_complex(self) -> np.ndarray:
        return self.amplitudes * np.exp(1j * self.phases)

    @classmethod
    def from_complex(cls, z, real_symmetric=False) -> "Spectrum":
        z = np.asarray(z, dtype=complex)
        rho = np.abs(z)
        theta = np.angle(z)
        theta[theta <= -np.pi] = np.pi
        theta[rho == 0] = 0.0
        return cls(rho, theta, real_symmetric=real_symmetric)

    def symmetry_error(self) -> float:
        """Largest deviation from conjugate symmetry, in complex magnitude."""
        z = self.to_complex()
        n = z.size
        err = abs(z[0].imag)
        if n > 1:
            w = np.arange(1, n)
            err = max(err, float(np.max(np.abs(z[w] - np.conj(z[n - w])))))
        if n % 2 == 0:
            err = max(err, abs(z[n // 2].imag))
        return float(err)

    def _check_symmetry(self):
        tol = SYMMETRY_RTOL * (1.0 + float(np.max(self.amplitudes)))
        err = self.symmetry_error()
        if err > tol:
            raise NotRealSymmetric(f"conjugate symmetry violated by {err:.3e} (tolerance {tol:.3e})")

    def __repr__(self):
        return f"Spectrum(N={self.n}, real_symmetric={self.real_symmetric})"


@dataclass(frozen=True)
class GeneratorConfig:
    """Surrogate batch settings.

    ``m`` counts the leading phases (after the DC phase) copied from the
    source; it is checked against the series length by :meth:`check_length`.
    """

    m: int
    repair_mode: str = "none"
    max_repair_iterations: int = 1000
    seed: int = 0
    count: int = 1

    def __post_init__(self):
        if int(self.m) != self.m or self.m <= 0:
            raise MOutOfRange(self.m, None)
        if self.repair_mode not in REPAIR_MODES:
            raise InvalidConfig(f"repair_mode must be one of {REPAIR_MODES}, got {self.repair_mode!r}")
        if int(self.max_repair_iterations) != self.max_repair_iterations or self.max_repair_iterations < 1:
            raise InvalidConfig("max_repair_iterations must be a positive integer")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise InvalidConfig("seed must be an unsigned 64-bit integer")
        if int(self.count) != self.count or self.count < 1:
            raise InvalidConfig("count must be >= 1")

    def check_length(self, n: int):
        if self.m > n // 2:
            raise MOutOfRange(self.m, n)


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    sd: float
    skewness: float
    kurtosis: float

    def as_dict(self):
        return {"mean": self.mean, "sd": self.sd, "skewness": self.skewness, "kurtosis": self.kurtosis}


@dataclass(frozen=True)
class ComparisonReport:
    """Batch averages and spreads of each quantity in ``QUANTITIES``.

    ``aggregates`` maps a quantity name to ``(average, sd)``; ``source``
    holds the statistics of the series the batch was compared against.
    """

    label: str
    batch_size: int
    aggregates: dict
    source: Optional[SummaryStats] = None
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        missing = [q for q in QUANTITIES if q not in self.aggregates]
        if missing:
            raise InvalidConfig(f"report lacks {missing}")
        for name, (_, sd) in self.aggregates.items():
            if not sd >= 0:
                raise InvalidConfig(f"negative spread for {name}")

    def average(self, quantity):
        return self.aggregates[quantity][0]

    def spread(self, quantity):
        return self.aggregates[quantity][1]
