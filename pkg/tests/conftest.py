import numpy as np
import pytest

from tsbench.timeseries import TimeSeries, builtin_dataset


@pytest.fixture
def nottem():
    return builtin_dataset("nottem")


@pytest.fixture
def airpassengers():
    return builtin_dataset("airpassengers")


def ar1(phi=0.7, n=500, seed=0, burn=100):
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal(n + burn)
    y = np.zeros(n + burn)
    for t in range(1, n + burn):
        y[t] = phi * y[t - 1] + noise[t]
    return TimeSeries(y[burn:], 1, "ar1")


@pytest.fixture
def ar1_series():
    return ar1()


# Lines printed by tests/test_acceptance.py; echoed in the terminal summary so
# they show up even when output capture is on.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
