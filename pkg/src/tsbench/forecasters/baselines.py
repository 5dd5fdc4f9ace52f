"""Reference baselines: seasonal naive, historical mean and drift."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..timeseries import TimeSeries
from .base import FittedModel, require_length


@dataclass(frozen=True, eq=False)
class SeasonalNaiveModel(FittedModel):
    history: np.ndarray = field(repr=False)
    cycle: int
    method: str = "seasonal-naive"

    def forecast(self, horizon: int) -> np.ndarray:
        last_cycle = self.history[len(self.history) - self.cycle:]
        return np.array([last_cycle[i % self.cycle] for i in range(horizon)])

    def extend(self, value: float) -> SeasonalNaiveModel:
        return SeasonalNaiveModel(np.append(self.history, value), self.cycle, self.method)


def fit_seasonal_naive(train: TimeSeries) -> SeasonalNaiveModel:
    """Repeat the last full cycle of the training series."""
    y = require_length(train, train.cycle, "seasonal-naive")
    return SeasonalNaiveModel(y, train.cycle)


@dataclass(frozen=True, eq=False)
class MeanModel(FittedModel):
    mean: float
    history: np.ndarray = field(repr=False)
    method: str = "mean"

    def forecast(self, horizon: int) -> np.ndarray:
        return np.full(horizon, self.mean)

    def extend(self, value: float) -> MeanModel:
        return MeanModel(self.mean, np.append(self.history, value), self.method)


def fit_mean(train: TimeSeries) -> MeanModel:
    y = require_length(train, 1, "mean")
    return MeanModel(float(np.mean(y)), y)


@dataclass(frozen=True, eq=False)
class DriftModel(FittedModel):
    slope: float
    history: np.ndarray = field(repr=False)
    method: str = "drift"

    def forecast(self, horizon: int) -> np.ndarray:
        steps = np.arange(1, horizon + 1, dtype=float)
        return self.history[-1] + steps * self.slope

    def extend(self, value: float) -> DriftModel:
        return DriftModel(self.slope, np.append(self.history, value), self.method)


def fit_drift(train: TimeSeries) -> DriftModel:
    """Extrapolate the line through the first and last observations."""
    y = require_length(train, 2, "drift")
    return DriftModel(float((y[-1] - y[0]) / (len(y) - 1)), y)
