"""Phase-randomized surrogates with similarity control.

The DC phase and the next ``m`` phases are copied from the source; the
remaining lower-half phases are drawn uniformly on (-pi, pi] and mirrored
(negated) into the upper half so the inverse transform is real. For even
N the Nyquist coefficient keeps its sign when ``m == N/2`` and otherwise
gets a random sign.

Random streams
--------------
Surrogate ``i`` of a batch seeded with ``seed`` draws from
``PCG64(SeedSequence(entropy=seed, spawn_key=(i,)))``. ``SeedSequence``
hashes (seed, i) into the generator state, so every surrogate is
reproducible on its own and batches do not depend on scheduling.
Within one surrogate the stream is consumed in a fixed order: the free
phases for w = m+1 .. ceil(N/2)-1 in increasing w, then (even N, m < N/2)
one integer draw for the Nyquist sign. Non-negative repair continues on
the same stream.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dft import forward_dft, inverse_dft
from .errors import MOutOfRange, NotRealSymmetric, PreconditionError, RepairDidNotConverge, InvalidConfig
from .types import GeneratorConfig, Spectrum, TimeSeries, validate_series


def surrogate_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for surrogate ``index`` of a batch seeded with ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=int(seed), spawn_key=(int(index),))))


def _check_m(m, n):
    if int(m) != m or m <= 0 or m > n // 2:
        raise MOutOfRange(m, n)


def randomize_phases(z: Spectrum, m: int, rng: np.random.Generator) -> Spectrum:
    """Keep phases 0..m, randomize the rest of the lower half, mirror the upper half."""
    if not z.real_symmetric:
        raise NotRealSymmetric("randomize_phases needs a real_symmetric spectrum")
    n = z.n
    _check_m(m, n)
    theta = np.array(z.phases)
    last_free = (n - 1) // 2  # N/2 - 1 for even N, (N-1)/2 for odd N
    k = last_free - m
    if k > 0:
        theta[m + 1 : last_free + 1] = np.pi - 2 * np.pi * rng.random(k)
    if n % 2 == 0 and m < n // 2:
        theta[n // 2] = np.pi if rng.integers(2) else 0.0
    w = np.arange(1, last_free + 1)
    upper = -theta[w]
    upper[upper <= -np.pi] = np.pi
    theta[n - w] = upper
    theta[z.amplitudes == 0] = 0.0
    return Spectrum(z.amplitudes, theta, real_symmetric=True)


def _is_constant(values) -> bool:
    return bool(np.all(values == values[0]))


def _from_spectrum(s: TimeSeries, spectrum: Spectrum, m: int, rng) -> TimeSeries:
    if _is_constant(s.values):
        return s
    return inverse_dft(randomize_phases(spectrum, m, rng), units=s.units)


def generate_one(s, m: int, rng: np.random.Generator) -> TimeSeries:
    """One surrogate of ``s``; a constant series is returned unchanged."""
    s = s if isinstance(s, TimeSeries) else validate_series(s)
    _check_m(m, s.n)
    return _from_spectrum(s, forward_dft(s), m, rng)


def clamp_negative(values) -> np.ndarray:
    """Set negative entries to zero (idempotent)."""
    values = np.asarray(values, dtype=float)
    # + 0.0 turns -0.0 into 0.0
    return np.where(values < 0, 0.0, values) + 0.0


def _repair(s: TimeSeries, first: TimeSeries, m, mode, max_iters, rng):
    if mode == "clamp":
        return validate_series(clamp_negative(first.values), units=s.units), 1
    current = np.array(first.values)
    iterations = 0
    negative = current < 0
    while negative.any() and iterations < max_iters:
        # the replacement is a surrogate of the current series, not of the source
        fresh = generate_one(validate_series(current), m, rng)
        current[negative] = fresh.values[negative]
        iterations += 1
        negative = current < 0
    if negative.any():
        raise RepairDidNotConverge(int(negative.sum()), iterations)
    return validate_series(current, units=s.units), iterations


def _check_nonneg_inputs(s: TimeSeries, mode, max_iters):
    if mode not in ("resample", "clamp"):
        raise InvalidConfig(f"repair mode must be 'resample' or 'clamp', got {mode!r}")
    if int(max_iters) != max_iters or max_iters < 1:
        raise InvalidConfig("max_iters must be a positive integer")
    if not np.any(s.values >= 0):
        raise PreconditionError("non-negative repair needs at least one non-negative source value")


def generate_nonneg(s, m: int, mode: str, max_iters: int, rng: np.random.Generator):
    """Surrogate with no negative values, plus the number of repair rounds.

    ``mode="resample"`` draws a surrogate of the current series and copies
    it into the negative positions until none remain (at most ``max_iters``
    rounds). ``mode="clamp"`` zeroes negatives in a single pass and reports
    one round. Neither mode preserves mean or SD.
    """
    s = s if isinstance(s, TimeSeries) else validate_series(s)
    _check_nonneg_inputs(s, mode, max_iters)
    first = generate_one(s, m, rng)
    return _repair(s, first, m, mode, max_iters, rng)


@dataclass(frozen=True, eq=False)
class SurrogateBatch:
    surrogates: tuple
    config: GeneratorConfig
    repair_iterations: tuple

    def __post_init__(self):
        lengths = {x.n for x in self.surrogates}
        if len(lengths) > 1:
            raise InvalidConfig(f"surrogates of unequal length: {sorted(lengths)}")
        if len(self.repair_iterations) != len(self.surrogates):
            raise InvalidConfig("one repair-iteration count per surrogate required")

    def __len__(self):
        return len(self.surrogates)

    def __iter__(self):
        return iter(self.surrogates)

    def as_array(self) -> np.ndarray:
        """``(count, N)`` array of surrogate values."""
        return np.vstack([x.values for x in self.surrogates])


def generate_batch(s, config: GeneratorConfig, workers: int = 1) -> SurrogateBatch:
    """``config.count`` surrogates, surrogate ``i`` drawn from ``surrogate_rng(seed, i)``.

    ``workers > 1`` spreads surrogates over a thread pool; output is
    identical for any worker count.
    """
    s = s if isinstance(s, TimeSeries) else validate_series(s)
    config.check_length(s.n)
    mode = config.repair_mode
    if mode != "none":
        _check_nonneg_inputs(s, mode, config.max_repair_iterations)
    spectrum = forward_dft(s)

    def one(i):
        rng = surrogate_rng(config.seed, i)
        first = _from_spectrum(s, spectrum, config.m, rng)
        if mode == "none":
            return first, 0
        try:
            return _repair(s, first, config.m, mode, config.max_repair_iterations, rng)
        except RepairDidNotConverge as err:
            raise RepairDidNotConverge(err.remaining, err.iterations, index=i) from None

    indices = range(config.count)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, indices))
    else:
        results = [one(i) for i in indices]
    return SurrogateBatch(
        surrogates=tuple(r[0] for r in results),
        config=config,
        repair_iterations=tuple(r[1] for r in results),
    )
