import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from published_listings import (
    AIR_ARIMA,
    AIR_ARIMA_ERRORS,
    AIR_TEST,
    NOTTEM_ARIMA,
    NOTTEM_ARIMA_ERRORS,
    NOTTEM_TEST,
)
from tsbench.errors import (
    DuplicateNameError,
    EmptyInputError,
    LengthMismatchError,
    ZeroObservationError,
    ZeroVarianceError,
)
from tsbench.metrics import (
    PCV,
    RMSE,
    MetricRegistry,
    MetricSpec,
    default_metrics,
    mae,
    mape,
    pcv,
    register_metric,
    rmse,
)


# brute-force loop oracles, deliberately written without numpy

def loop_rmse(o, p):
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(o, p)) / len(o))


def loop_mae(o, p):
    return sum(abs(a - b) for a, b in zip(o, p)) / len(o)


def loop_mape(o, p):
    return sum(abs(a - b) / abs(a) for a, b in zip(o, p)) / len(o) * 100


def loop_var(x):
    m = sum(x) / len(x)
    return sum((v - m) ** 2 for v in x) / (len(x) - 1)


def loop_pcv(o, p):
    return abs(loop_var(o) - loop_var(p)) / loop_var(o) * 100


def test_published_nottem_arima():
    expected = NOTTEM_ARIMA_ERRORS
    assert rmse(NOTTEM_TEST, NOTTEM_ARIMA) == pytest.approx(expected[0], abs=1e-3)
    assert mae(NOTTEM_TEST, NOTTEM_ARIMA) == pytest.approx(expected[1], abs=1e-3)
    assert mape(NOTTEM_TEST, NOTTEM_ARIMA) == pytest.approx(expected[2], abs=1e-3)


def test_published_airpassengers_arima():
    assert mae(AIR_TEST, AIR_ARIMA) == pytest.approx(AIR_ARIMA_ERRORS[1], abs=1e-3)


def test_hand_values():
    assert rmse([0, 0], [3, 4]) == pytest.approx(math.sqrt(12.5), rel=1e-15)
    assert pcv([1, 2, 3], [2, 2, 2]) == 100.0


@pytest.mark.parametrize("fn", [rmse, mae, mape, pcv])
def test_zero_on_identical(fn):
    x = [3.0, -1.5, 7.25, 2.0]
    assert fn(x, x) == 0.0


@pytest.mark.parametrize("fn", [rmse, mae, mape, pcv])
def test_length_mismatch(fn):
    with pytest.raises(LengthMismatchError):
        fn([1.0, 2.0, 3.0], [1.0, 2.0])


def test_empty_and_degenerate_inputs():
    with pytest.raises(EmptyInputError):
        rmse([], [])
    with pytest.raises(EmptyInputError):
        pcv([1.0], [1.0])
    with pytest.raises(ZeroObservationError):
        mape([1.0, 0.0], [1.0, 1.0])
    with pytest.raises(ZeroVarianceError):
        pcv([2.0, 2.0, 2.0], [1.0, 2.0, 3.0])


def test_pcv_uses_sample_variance():
    obs, pred = [1.0, 4.0, 2.0, 8.0], [2.0, 3.0, 3.0, 5.0]
    # var(obs) = 9.5833..., var(pred) = 1.5833...
    assert pcv(obs, pred) == pytest.approx(loop_pcv(obs, pred), rel=1e-14)
    assert pcv(obs, pred) == pytest.approx((115 / 12 - 19 / 12) / (115 / 12) * 100, rel=1e-14)


def test_pcv_near_equal_variances_is_exact():
    rng = np.random.default_rng(1)
    obs = rng.normal(50, 10, 40)
    pred = obs[::-1] * (1 + 1e-9)  # same spread up to a tiny rescale
    o, p = [Fraction(v) for v in obs.tolist()], [Fraction(v) for v in pred.tolist()]

    def ss(x):
        m = sum(x) / len(x)
        return sum((v - m) ** 2 for v in x)

    expected = float(abs(ss(o) - ss(p)) / ss(o) * 100)
    assert pcv(obs, pred) == expected
    assert pcv([1e8, 1e8 + 1.0], [5.0, 5.0 + (1.0 + 2**-40)]) > 0


def test_randomized_against_loop_oracles():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(2, 40))
        o = rng.uniform(0.5, 100, n) * rng.choice([-1, 1], n)
        p = o + rng.normal(0, 10, n)
        ol, pl = o.tolist(), p.tolist()
        for fn, oracle in [(rmse, loop_rmse), (mae, loop_mae), (mape, loop_mape), (pcv, loop_pcv)]:
            assert fn(o, p) == pytest.approx(oracle(ol, pl), rel=1e-12)
        assert rmse(o, p) >= mae(o, p) >= 0


vectors = st.integers(2, 30).flatmap(lambda n: st.tuples(
    st.lists(st.floats(0.1, 1e3), min_size=n, max_size=n),
    st.lists(st.floats(-1e3, 1e3), min_size=n, max_size=n)))


@settings(max_examples=300, deadline=None)
@given(vectors, st.floats(0.01, 100) | st.floats(-100, -0.01))
def test_scale_properties(pair, c):
    o, p = np.array(pair[0]), np.array(pair[1])
    assert rmse(c * o, c * p) == pytest.approx(abs(c) * rmse(o, p), rel=1e-12, abs=1e-300)
    assert mae(c * o, c * p) == pytest.approx(abs(c) * mae(o, p), rel=1e-12, abs=1e-300)
    assert mape(c * o, c * p) == pytest.approx(mape(o, p), rel=1e-12)
    if np.var(o, ddof=1) > 1e-6:
        assert pcv(c * o, c * p) == pytest.approx(pcv(o, p), rel=1e-9)


@settings(max_examples=200, deadline=None)
@given(vectors, st.randoms(use_true_random=False))
def test_permutation_invariance(pair, rnd):
    o, p = np.array(pair[0]), np.array(pair[1])
    idx = list(range(len(o)))
    rnd.shuffle(idx)
    for fn in (rmse, mae, mape):
        assert fn(o[idx], p[idx]) == pytest.approx(fn(o, p), rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=30), st.floats(0, 1e3))
def test_equal_abs_errors_make_rmse_equal_mae(o, e):
    o = np.array(o)
    signs = np.where(np.arange(len(o)) % 2 == 0, 1.0, -1.0)
    p = o + signs * e
    assert rmse(o, p) == pytest.approx(mae(o, p), rel=1e-9, abs=1e-9)


def test_registry_order():
    registry = register_metric(default_metrics(), PCV)
    assert registry.columns == ("RMSE", "MAE", "MAPE", "PCV", "exec_time")


def test_registry_duplicate_and_empty():
    with pytest.raises(DuplicateNameError):
        register_metric(default_metrics(), RMSE)
    single = register_metric(MetricRegistry(), RMSE)
    assert single.names == ("RMSE",)


def test_registry_is_not_mutated():
    base = default_metrics()
    register_metric(base, MetricSpec("MAX", lambda o, p: float(np.max(np.abs(np.subtract(o, p))))))
    assert base.names == ("RMSE", "MAE", "MAPE")


def test_exec_time_is_reserved():
    with pytest.raises(ValueError):
        register_metric(default_metrics(), MetricSpec("exec_time", rmse))
