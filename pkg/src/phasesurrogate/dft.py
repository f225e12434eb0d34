"""Unnormalized forward DFT, 1/N inverse DFT, and a Parseval diagnostic.

Conventions::

    zeta_w = sum_k S_k exp(-2j*pi*k*w/N)
    S_k    = (1/N) sum_w zeta_w exp(+2j*pi*w*k/N)

numpy's pocketfft handles every length, including primes and odd sizes
such as 745 or 365.
"""
import numpy as np

from .errors import LengthMismatch, NotRealSymmetric, ResidueTooLarge
from .types import SYMMETRY_RTOL, Spectrum, TimeSeries, validate_series


def _as_series(s) -> TimeSeries:
    return s if isinstance(s, TimeSeries) else validate_series(s)


def full_spectrum(x) -> np.ndarray:
    """Complex DFT of a real array, with the upper half mirrored exactly.

    Building the upper half as the conjugate of the lower half makes the
    result conjugate-symmetric bit for bit, not just up to roundoff.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    half = np.fft.rfft(x)
    z = np.empty(n, dtype=complex)
    z[: half.size] = half
    w = np.arange(half.size, n)
    z[w] = np.conj(half[n - w])
    # DC and Nyquist of a real signal are real
    z[0] = z[0].real
    if n % 2 == 0:
        z[n // 2] = z[n // 2].real
    return z


def forward_dft(s) -> Spectrum:
    """Polar-form spectrum of a real series, flagged ``real_symmetric``."""
    s = _as_series(s)
    return Spectrum.from_complex(full_spectrum(s.values), real_symmetric=True)


def inverse_dft(z: Spectrum, units=None) -> TimeSeries:
    """Real series from a conjugate-symmetric spectrum.

    The imaginary part of the complex inverse is discarded only after
    checking it is below ``1e-9 * (1 + max amplitude)``.
    """
    if not z.real_symmetric:
        raise NotRealSymmetric("inverse_dft needs a spectrum flagged real_symmetric")
    x = np.fft.ifft(z.to_complex())
    residue = float(np.max(np.abs(x.imag))) if x.size else 0.0
    limit = SYMMETRY_RTOL * (1.0 + float(np.max(z.amplitudes)))
    if residue > limit:
        raise ResidueTooLarge(residue, limit)
    return validate_series(x.real, units=units)


def parseval_gap(s, z: Spectrum) -> float:
    """|sum s_k^2 - (1/N) sum rho_w^2|; zero for z = forward_dft(s)."""
    s = _as_series(s)
    if s.n != z.n:
        raise LengthMismatch(s.n, z.n)
    time_energy = float(np.sum(s.values**2))
    freq_energy = float(np.sum(z.amplitudes**2)) / z.n
    return abs(time_energy - freq_energy)
