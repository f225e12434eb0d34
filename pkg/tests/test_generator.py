import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy import stats as sps

import phasesurrogate.generator as gen
from oracles import direct_circular_autocorr
from phasesurrogate.dft import forward_dft
from phasesurrogate.errors import MOutOfRange, NotRealSymmetric, PreconditionError, RepairDidNotConverge
from phasesurrogate.generator import (
    clamp_negative,
    generate_batch,
    generate_nonneg,
    generate_one,
    randomize_phases,
    surrogate_rng,
)
from phasesurrogate.stats import circular_autocorr, summary_stats
from phasesurrogate.synthetic import ar1_signal, no_like_signal
from phasesurrogate.types import GeneratorConfig, Spectrum, validate_series


@st.composite
def series_and_m(draw, min_n=2, max_n=300):
    n = draw(st.integers(min_n, max_n))
    x = draw(arrays(np.float64, n, elements=st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)))
    m = draw(st.integers(1, n // 2))
    seed = draw(st.integers(0, 2**64 - 1))
    return x, m, seed


def test_n8_m3_index_ranges():
    x = np.random.default_rng(0).normal(size=8)
    z = forward_dft(x)
    out = randomize_phases(z, 3, surrogate_rng(5, 0))
    th = out.phases
    np.testing.assert_array_equal(th[:4], z.phases[:4])
    assert th[4] in (0.0, np.pi)
    np.testing.assert_array_equal(th[5:], -th[1:4][::-1])
    np.testing.assert_array_equal(out.amplitudes, z.amplitudes)


def test_odd_length_random_block_reaches_middle():
    # N=9: random block is w = m+1 .. 4, mirrored into 5 .. 8
    z = forward_dft(np.random.default_rng(1).normal(size=9))
    out = randomize_phases(z, 1, surrogate_rng(0, 0))
    assert np.all(out.phases[2:5] != z.phases[2:5])
    np.testing.assert_array_equal(out.phases[5:], -out.phases[1:5][::-1])


def test_m_range_checked():
    z = forward_dft(np.arange(10.0))
    for m in (0, 6, -1):
        with pytest.raises(MOutOfRange):
            randomize_phases(z, m, surrogate_rng(0, 0))


def test_requires_symmetric_spectrum():
    with pytest.raises(NotRealSymmetric):
        randomize_phases(Spectrum([1.0, 1.0, 1.0, 1.0], [0, 0, 0, 0]), 1, surrogate_rng(0, 0))


@pytest.mark.parametrize("n", [2, 4, 10, 64, 745 + 1])
def test_identity_at_half_even(n):
    x = np.random.default_rng(n).normal(size=n) * 5 + 2
    out = generate_one(x, n // 2, surrogate_rng(3, 0)).values
    assert np.max(np.abs(out - x)) <= 1e-10 * (1 + np.max(np.abs(x)))


@pytest.mark.parametrize("n", [3, 5, 11, 745])
def test_identity_at_floor_half_odd(n):
    # every lower-half phase is kept, so odd N is also reproduced exactly
    x = np.random.default_rng(n).normal(size=n)
    out = generate_one(x, n // 2, surrogate_rng(3, 0)).values
    assert np.max(np.abs(out - x)) <= 1e-10 * (1 + np.max(np.abs(x)))


@pytest.mark.parametrize("n,m", [(8, 1), (12, 5), (13, 2)])
def test_constant_series_returned_unchanged(n, m):
    s = validate_series([2.5] * n)
    out = generate_one(s, m, surrogate_rng(0, 0))
    np.testing.assert_array_equal(out.values, s.values)


def test_constant_spectrum_randomization_keeps_inverse():
    z = forward_dft([3.0] * 8)
    out = randomize_phases(z, 1, surrogate_rng(9, 0))
    np.testing.assert_allclose(np.fft.ifft(out.to_complex()).real, 3.0, atol=1e-15)


@settings(max_examples=200)
@given(series_and_m())
def test_preservation_properties(args):
    x, m, seed = args
    s = validate_series(x)
    out = generate_one(s, m, surrogate_rng(seed, 0))
    src, sur = summary_stats(s), summary_stats(out)
    assert abs(sur.mean - src.mean) <= 1e-8 * (1 + abs(src.mean))
    assert abs(sur.sd - src.sd) <= 1e-8 * (1 + src.sd)
    a, b = circular_autocorr(s), circular_autocorr(out)
    assert np.max(np.abs(a - b)) <= 1e-7 * max(np.max(np.abs(a)), 1e-300)
    rho, rho_out = forward_dft(s).amplitudes, forward_dft(out).amplitudes
    assert np.max(np.abs(rho_out - rho)) <= 1e-8 * (1 + np.max(rho))


@given(series_and_m(min_n=4))
def test_low_phases_preserved_exactly(args):
    x, m, seed = args
    z = forward_dft(x)
    out = randomize_phases(z, m, surrogate_rng(seed, 0))
    keep = np.arange(m + 1)
    keep = keep[z.amplitudes[keep] > 1e-9]
    np.testing.assert_array_equal(out.phases[keep], z.phases[keep])
    np.testing.assert_array_equal(out.amplitudes, z.amplitudes)


def test_random_phases_are_uniform():
    z = forward_dft(np.random.default_rng(0).normal(size=401))
    draws = np.concatenate([randomize_phases(z, 3, surrogate_rng(1, i)).phases[4:201] for i in range(50)])
    assert draws.min() > -np.pi and draws.max() <= np.pi
    assert sps.kstest(draws, sps.uniform(loc=-np.pi, scale=2 * np.pi).cdf).pvalue > 1e-3


def test_nyquist_sign_random_below_half_kept_at_half():
    x = np.random.default_rng(2).normal(size=16)
    z = forward_dft(x)
    signs = [randomize_phases(z, 3, surrogate_rng(0, i)).phases[8] for i in range(400)]
    frac_pi = np.mean(np.array(signs) == np.pi)
    assert 0.4 < frac_pi < 0.6
    assert all(randomize_phases(z, 8, surrogate_rng(0, i)).phases[8] == z.phases[8] for i in range(20))


def test_surrogate_matches_direct_autocorr_oracle():
    x = np.random.default_rng(4).normal(size=30)
    out = generate_one(x, 2, surrogate_rng(0, 0))
    np.testing.assert_allclose(direct_circular_autocorr(out.values), direct_circular_autocorr(x), atol=1e-9)


def test_rng_streams_differ_by_index_and_seed():
    a = surrogate_rng(1, 0).random(4)
    assert not np.array_equal(a, surrogate_rng(1, 1).random(4))
    assert not np.array_equal(a, surrogate_rng(2, 0).random(4))
    np.testing.assert_array_equal(a, surrogate_rng(1, 0).random(4))


def test_batch_is_deterministic_and_order_independent():
    s = ar1_signal(200, seed=3)
    cfg = GeneratorConfig(m=3, seed=42, count=50)
    a = generate_batch(s, cfg).as_array()
    b = generate_batch(s, cfg).as_array()
    c = generate_batch(s, cfg, workers=8).as_array()
    np.testing.assert_array_equal(a, b)
    np.testing.assert_array_equal(a, c)
    # surrogate i does not depend on the batch size
    d = generate_batch(s, GeneratorConfig(m=3, seed=42, count=10)).as_array()
    np.testing.assert_array_equal(a[:10], d)


def test_batch_means_equal_source_mean():
    s = ar1_signal(745, seed=1, c=5.0)
    batch = generate_batch(s, GeneratorConfig(m=3, seed=0, count=100))
    means = batch.as_array().mean(axis=1)
    assert np.all(np.abs(means - s.values.mean()) <= 1e-8)
    assert batch.repair_iterations == (0,) * 100
    assert all(x.n == s.n for x in batch)


def test_batch_checks_m():
    with pytest.raises(MOutOfRange):
        generate_batch(np.arange(10.0), GeneratorConfig(m=6))


def test_clamp_definition():
    np.testing.assert_array_equal(clamp_negative([-0.1, 0.5, -0.2, 1.0]), [0, 0.5, 0, 1.0])
    assert not np.signbit(clamp_negative([-0.0])).any()


def test_clamp_mode_single_pass_and_idempotent():
    s = no_like_signal(seed=2)
    out, iters = generate_nonneg(s, 3, "clamp", 10, surrogate_rng(0, 0))
    assert iters == 1 and np.all(out.values >= 0)
    np.testing.assert_array_equal(clamp_negative(out.values), out.values)
    raw = generate_one(s, 3, surrogate_rng(0, 0)).values
    np.testing.assert_array_equal(out.values, clamp_negative(raw))


def test_no_repair_needed_returns_first_surrogate():
    s = validate_series(100 + np.sin(np.arange(64) / 3.0))
    out, iters = generate_nonneg(s, 2, "resample", 10, surrogate_rng(0, 0))
    assert iters == 0
    np.testing.assert_array_equal(out.values, generate_one(s, 2, surrogate_rng(0, 0)).values)


def test_resample_draws_from_current_surrogate(monkeypatch):
    s = no_like_signal(seed=5)
    seen = []
    real = gen.generate_one

    def spy(series, m, rng):
        seen.append(np.array(series.values))
        return real(series, m, rng)

    monkeypatch.setattr(gen, "generate_one", spy)
    out, iters = generate_nonneg(s, 10, "resample", 1000, surrogate_rng(0, 0))
    assert iters >= 1 and len(seen) == iters + 1
    np.testing.assert_array_equal(seen[0], s.values)
    # the first replacement is drawn from the first surrogate, not from the source
    first = real(s, 10, surrogate_rng(0, 0)).values
    np.testing.assert_array_equal(seen[1], first)
    assert np.all(out.values >= 0)
    # only positions that were negative were replaced
    keep = first >= 0
    np.testing.assert_array_equal(out.values[keep], first[keep])


def test_resample_shifts_moments():
    s = no_like_signal(seed=0)
    out, _ = generate_nonneg(s, 100, "resample", 1000, surrogate_rng(1, 0))
    assert np.all(out.values >= 0)
    assert out.values.mean() != pytest.approx(s.values.mean(), rel=1e-6)


def test_resample_cap_raises():
    x = np.r_[5.0, -np.ones(63)]
    with pytest.raises(RepairDidNotConverge) as err:
        generate_nonneg(x, 1, "resample", 1, surrogate_rng(0, 0))
    assert err.value.remaining > 0 and err.value.iterations == 1


def test_nonneg_precondition():
    with pytest.raises(PreconditionError):
        generate_nonneg(-np.arange(1.0, 9.0), 1, "resample", 10, surrogate_rng(0, 0))
    with pytest.raises(PreconditionError):
        generate_batch(-np.arange(1.0, 9.0), GeneratorConfig(m=1, repair_mode="clamp"))


def test_batch_repair_error_names_surrogate():
    x = np.r_[5.0, -np.ones(63)]
    with pytest.raises(RepairDidNotConverge) as err:
        generate_batch(x, GeneratorConfig(m=1, repair_mode="resample", max_repair_iterations=1, count=3))
    assert err.value.index == 0


def test_batch_with_repair_is_nonnegative():
    s = no_like_signal(seed=1)
    for mode in ("resample", "clamp"):
        batch = generate_batch(s, GeneratorConfig(m=20, repair_mode=mode, count=30, seed=4))
        assert batch.as_array().min() >= 0
        assert len(batch.repair_iterations) == 30
