import numpy as np
import pytest

from conftest import ar1
from published_listings import NOTTEM_1938
from tsbench.errors import DuplicateMethodError, SeriesTooShortError
from tsbench.forecasters import (
    BUILTIN_NAMES,
    ForecasterSpec,
    builtin_forecaster,
    default_forecasters,
    fit_ar_lite,
    fit_drift,
    fit_ets_lite,
    fit_mean,
    fit_psf,
    fit_seasonal_naive,
    register_forecaster,
)
from tsbench.forecasters.ar import choose_differencing, kpss_statistic
from tsbench.forecasters.psf import denormalize, match_next_cycle, normalize
from tsbench.timeseries import SplitSpec, TimeSeries, holdout_split


@pytest.fixture
def nottem_train(nottem):
    return holdout_split(nottem, SplitSpec(12))[0]


# seasonal naive, mean, drift

def test_seasonal_naive_repeats_last_cycle(nottem_train):
    f = fit_seasonal_naive(nottem_train).forecast(12)
    assert list(f) == NOTTEM_1938
    f24 = fit_seasonal_naive(nottem_train).forecast(24)
    assert list(f24) == NOTTEM_1938 * 2


def test_seasonal_naive_degenerate():
    assert list(fit_seasonal_naive(TimeSeries([3.0] * 8, 4)).forecast(5)) == [3.0] * 5
    assert list(fit_seasonal_naive(TimeSeries([1.0, 2.0, 9.0], 1)).forecast(3)) == [9.0] * 3
    with pytest.raises(SeriesTooShortError):
        fit_seasonal_naive(TimeSeries([1.0, 2.0], 12))


def test_mean_forecast(nottem_train):
    assert list(fit_mean(TimeSeries([2.0, 4.0, 6.0])).forecast(3)) == [4.0, 4.0, 4.0]
    assert list(fit_mean(TimeSeries([5.0])).forecast(1)) == [5.0]
    total = 0.0
    for v in nottem_train.values.tolist():
        total += v
    assert fit_mean(nottem_train).forecast(1)[0] == pytest.approx(total / 228, rel=1e-14)
    assert total == pytest.approx(11176.8, abs=1e-9)


def test_drift_forecast():
    np.testing.assert_allclose(fit_drift(TimeSeries([1.0, 2.0, 3.0])).forecast(2), [4.0, 5.0])
    np.testing.assert_allclose(fit_drift(TimeSeries([5.0, 5.0])).forecast(3), [5.0, 5.0, 5.0])
    np.testing.assert_allclose(fit_drift(TimeSeries([0.0, 10.0])).forecast(1), [20.0])
    with pytest.raises(SeriesTooShortError):
        fit_drift(TimeSeries([1.0]))


# ar-lite

def test_kpss_separates_stationary_from_random_walk():
    rng = np.random.default_rng(11)
    walk = np.cumsum(rng.standard_normal(400))
    assert choose_differencing(walk) == 1
    assert choose_differencing(rng.standard_normal(400)) == 0
    assert kpss_statistic(np.full(50, 3.0)) == 0.0


def test_ar_white_noise_close_to_mean():
    rng = np.random.default_rng(3)
    y = 10 + rng.standard_normal(300)
    model = fit_ar_lite(TimeSeries(y))
    assert model.d == 0
    assert model.order <= 2
    se = y.std(ddof=1) / np.sqrt(len(y))
    assert abs(model.forecast(1)[0] - y.mean()) < 2 * y.std(ddof=1)
    assert abs(model.forecast(20)[-1] - y.mean()) < 2 * se + 0.1


def test_ar_recovers_phi(ar1_series):
    model = fit_ar_lite(ar1_series)
    assert model.d == 0
    assert abs(model.phi[0] - 0.7) <= 0.1


def test_ar_recovers_phi_on_most_seeds():
    hits = sum(abs(fit_ar_lite(ar1(seed=s)).phi[0] - 0.7) <= 0.1 for s in range(20))
    assert hits >= 16


def test_ar_constant_series():
    model = fit_ar_lite(TimeSeries([4.0] * 30))
    assert model.d == 0 and model.order == 0
    np.testing.assert_allclose(model.forecast(6), 4.0, atol=1e-12)


def test_ar_too_short():
    with pytest.raises(SeriesTooShortError):
        fit_ar_lite(TimeSeries(np.arange(9.0)))


def test_ar_extend_reproduces_tail(ar1_series):
    model = fit_ar_lite(ar1_series)
    full = model.forecast(8)
    extended = model.extend(full[0])
    np.testing.assert_allclose(extended.forecast(7), full[1:], atol=1e-9)
    np.testing.assert_array_equal(extended.coef, model.coef)


def test_ar_shift_equivariance_with_differencing():
    rng = np.random.default_rng(8)
    walk = np.cumsum(rng.standard_normal(300)) + 0.2 * np.arange(300)
    base = fit_ar_lite(TimeSeries(walk))
    shifted = fit_ar_lite(TimeSeries(walk + 125.0))
    assert base.d == shifted.d == 1
    np.testing.assert_allclose(shifted.forecast(12), base.forecast(12) + 125.0, atol=1e-9)


# ets-lite

def test_ets_periodic():
    period = np.array([3.0, 7.0, 1.0, 5.0, 9.0, 2.0])
    y = np.tile(period, 8) + 20
    f = fit_ets_lite(TimeSeries(y, 6)).forecast(12)
    np.testing.assert_allclose(f, np.tile(period, 2) + 20, atol=1e-6)


def test_ets_constant_and_ramp():
    np.testing.assert_allclose(fit_ets_lite(TimeSeries([2.5] * 24, 12)).forecast(5), 2.5)
    ramp = 3.0 + 0.5 * np.arange(40)
    f = fit_ets_lite(TimeSeries(ramp, 1)).forecast(10)
    np.testing.assert_allclose(f, 3.0 + 0.5 * np.arange(40, 50), atol=1e-3)


def test_ets_parameters_on_grid(nottem_train):
    model = fit_ets_lite(nottem_train)
    for v in (model.alpha, model.beta, model.gamma):
        assert 0 < v < 1 and round(v * 10) == pytest.approx(v * 10)
    with pytest.raises(SeriesTooShortError):
        fit_ets_lite(TimeSeries(np.arange(23.0), 12))


def test_ets_extend_matches_refiltering(nottem_train):
    model = fit_ets_lite(nottem_train)
    ext = model.extend(50.0)
    assert (ext.alpha, ext.beta, ext.gamma) == (model.alpha, model.beta, model.gamma)
    assert ext.n == model.n + 1


# psf

def test_psf_periodic():
    period = np.array([1.0, 4.0, 2.0, 8.0, 5.0])
    model = fit_psf(TimeSeries(np.tile(period, 10), 5))
    np.testing.assert_allclose(model.forecast(5), period, atol=1e-9)
    np.testing.assert_allclose(model.forecast(12), np.tile(period, 3)[:12], atol=1e-9)


def test_psf_alternating_shapes():
    a = np.array([0.0, 1.0, 2.0, 3.0])
    b = np.array([3.0, 0.5, 3.0, 0.5])
    y = np.concatenate([a, b] * 5)  # ends with B
    model = fit_psf(TimeSeries(y, 4))
    assert model.k == 2
    assert model.labels[0::2] == (model.labels[0],) * 5
    np.testing.assert_allclose(model.forecast(4), a, atol=1e-9)
    np.testing.assert_allclose(model.forecast(8), np.concatenate([a, b]), atol=1e-9)


def test_label_matching_by_hand():
    cycles = np.arange(12.0).reshape(6, 2)
    # labels 0 1 2 0 1 ?: window 5 has no earlier occurrence, (0,1) occurs at end 1 -> next is cycle 2
    labels = [0, 1, 2, 0, 1, 2]
    np.testing.assert_array_equal(match_next_cycle(labels[:5], cycles[:5]), cycles[2])
    # no repeated label at all -> mean of every cycle
    np.testing.assert_array_equal(match_next_cycle([0, 1, 2], cycles[:3]), cycles[:3].mean(axis=0))
    # several matches are averaged
    np.testing.assert_array_equal(
        match_next_cycle([0, 1, 0, 2, 0], cycles[:5]), (cycles[1] + cycles[3]) / 2)


def test_psf_constant_series():
    model = fit_psf(TimeSeries([7.0] * 36, 12))
    np.testing.assert_allclose(model.forecast(12), 7.0, atol=1e-12)


def test_psf_truncates_leading_remainder():
    period = np.array([1.0, 2.0, 6.0])
    y = np.concatenate([[99.0], np.tile(period, 6)])
    model = fit_psf(TimeSeries(y, 3))
    assert model.cycles.shape == (6, 3)


def test_psf_extend_partial_cycle():
    period = np.array([1.0, 4.0, 2.0, 8.0])
    model = fit_psf(TimeSeries(np.tile(period, 6), 4))
    full = model.forecast(4)
    ext = model.extend(full[0])
    np.testing.assert_allclose(ext.forecast(3), full[1:], atol=1e-12)


def test_psf_normalization_round_trip():
    rng = np.random.default_rng(0)
    x = rng.normal(50, 20, 200)
    lo, hi = x.min(), x.max()
    z = normalize(x, lo, hi)
    assert z.min() == 0.0 and z.max() == 1.0
    np.testing.assert_allclose(denormalize(z, lo, hi), x, atol=1e-12)
    assert np.all(normalize([3.0, 3.0], 3.0, 3.0) == 0.5)


def test_psf_too_short():
    with pytest.raises(SeriesTooShortError):
        fit_psf(TimeSeries(np.arange(35.0), 12))


def test_psf_deterministic(nottem_train):
    a, b = fit_psf(nottem_train), fit_psf(nottem_train)
    assert a.labels == b.labels
    np.testing.assert_array_equal(a.forecast(12), b.forecast(12))


# shared properties and the registry

@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_forecast_lengths_and_purity(name, nottem_train):
    model = builtin_forecaster(name).fit(nottem_train)
    for h in (1, 5, 12, 36):
        out = model.forecast(h)
        assert out.shape == (h,) and np.all(np.isfinite(out))
    np.testing.assert_array_equal(model.forecast(12), model.forecast(12))


def test_seasonal_naive_extend_and_shift(nottem_train):
    model = fit_seasonal_naive(nottem_train)
    full = model.forecast(12)
    np.testing.assert_array_equal(model.extend(full[0]).forecast(11), full[1:])
    shifted = fit_seasonal_naive(TimeSeries(nottem_train.values + 3.5, 12))
    np.testing.assert_allclose(shifted.forecast(12), full + 3.5, atol=1e-9)


def test_registry_defaults_and_duplicates():
    registry = default_forecasters()
    assert registry.names == ("ar-lite", "psf")
    bigger = register_forecaster(registry, builtin_forecaster("ets-lite"))
    assert bigger.names == ("ar-lite", "psf", "ets-lite")
    with pytest.raises(DuplicateMethodError):
        register_forecaster(registry, builtin_forecaster("psf"))


def test_function_spec_wraps_user_callable():
    spec = ForecasterSpec.from_function("last", lambda data, nval: [data[-1]] * nval)
    assert spec.black_box and not spec.supports_refit
    model = spec.fit(TimeSeries([1.0, 2.0, 3.0]))
    assert list(model.forecast(2)) == [3.0, 3.0]
