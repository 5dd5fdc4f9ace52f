"""Autoregressive forecaster with automatic differencing and AIC order selection."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..timeseries import TimeSeries
from .base import FittedModel, require_length

MAX_ORDER = 10
MIN_LENGTH = 10
# 5% critical value of the KPSS level-stationarity statistic.
KPSS_CRITICAL_5PCT = 0.463


def kpss_statistic(y: np.ndarray) -> float:
    """KPSS statistic for level stationarity with a Bartlett long-run variance.

    Uses the long bandwidth ``trunc(12 * (n / 100) ** 0.25)``; the short one
    rejects too often on persistent but stationary series. Returns 0 for a
    constant series.
    """
    n = len(y)
    e = y - y.mean()
    lags = int(12 * (n / 100) ** 0.25)
    s2 = np.dot(e, e) / n
    for j in range(1, min(lags, n - 1) + 1):
        s2 += 2 * (1 - j / (lags + 1)) * np.dot(e[j:], e[:-j]) / n
    if s2 <= 0:
        return 0.0
    partial = np.cumsum(e)
    return float(np.dot(partial, partial) / (n * n * s2))


def choose_differencing(y: np.ndarray) -> int:
    """Return 1 when the KPSS test rejects level stationarity at 5%, else 0."""
    return int(kpss_statistic(y) > KPSS_CRITICAL_5PCT)


def _design(z: np.ndarray, p: int, first: int) -> tuple[np.ndarray, np.ndarray]:
    rows = np.arange(first, len(z))
    cols = [np.ones(len(rows))] + [z[rows - j] for j in range(1, p + 1)]
    return np.column_stack(cols), z[rows]


def _lstsq(X, target):
    coef, _, rank, _ = np.linalg.lstsq(X, target, rcond=None)
    if rank < X.shape[1]:
        return None
    return coef


def fit_ar_coefficients(z: np.ndarray, max_order: int) -> tuple[np.ndarray, int]:
    """Least-squares AR(p) with intercept; p picked by AIC on a common sample.

    Returns ``(coef, p)`` with ``coef = [intercept, phi_1..phi_p]``. Orders
    whose lag matrix is rank deficient are skipped, so p=0 (the mean model)
    is always available.
    """
    n = len(z) - max_order
    # perfect fits up to rounding tie, and the smallest order wins
    floor = (np.finfo(float).eps * max(1.0, float(np.max(np.abs(z))))) ** 2
    best = None
    for p in range(max_order + 1):
        X, target = _design(z, p, max_order)
        coef = _lstsq(X, target)
        if coef is None:
            continue
        sse = float(np.sum((target - X @ coef) ** 2))
        aic = n * np.log(max(sse / n, floor)) + 2 * (p + 1)
        if best is None or aic < best[0]:
            best = (aic, p, coef)
    _, p, coef = best
    full = _lstsq(*_design(z, p, p))
    return (coef if full is None else full), p


@dataclass(frozen=True, eq=False)
class ArModel(FittedModel):
    d: int
    coef: np.ndarray
    history: np.ndarray = field(repr=False)
    method: str = "ar-lite"

    @property
    def order(self) -> int:
        return len(self.coef) - 1

    @property
    def intercept(self) -> float:
        return float(self.coef[0])

    @property
    def phi(self) -> np.ndarray:
        return self.coef[1:]

    def forecast(self, horizon: int) -> np.ndarray:
        z = np.diff(self.history) if self.d else self.history
        p = self.order
        lagged = list(z[len(z) - p:]) if p else []
        out = np.empty(horizon)
        for i in range(horizon):
            value = self.coef[0]
            for j in range(1, p + 1):
                value += self.coef[j] * lagged[-j]
            out[i] = value
            lagged.append(value)
        if self.d:
            out = self.history[-1] + np.cumsum(out)
        return out

    def extend(self, value: float) -> ArModel:
        return ArModel(self.d, self.coef, np.append(self.history, value), self.method)


def fit_ar_lite(train: TimeSeries) -> ArModel:
    y = require_length(train, MIN_LENGTH, "ar-lite")
    d = choose_differencing(y)
    z = np.diff(y) if d else y
    max_order = min(MAX_ORDER, len(y) // 5)
    coef, _ = fit_ar_coefficients(z, max_order)
    return ArModel(d, coef, y)
