"""Additive Holt-Winters smoothing with grid-searched smoothing weights."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..timeseries import TimeSeries
from .base import FittedModel, require_length

GRID = np.round(np.arange(1, 10) / 10, 1)


def initial_state(y: np.ndarray, m: int) -> tuple[float, float, np.ndarray]:
    """Level and trend from the first two cycle means; seasonals from the first cycle.

    The state is positioned at the end of the first cycle.
    """
    first, second = y[:m].mean(), y[m:2 * m].mean()
    return float(first), float((second - first) / m), y[:m] - first


def _grid_sse(y, m, alpha, beta, gamma):
    level0, trend0, season0 = initial_state(y, m)
    g = len(alpha)
    level = np.full(g, level0)
    trend = np.full(g, trend0)
    season = np.tile(season0, (g, 1))
    sse = np.zeros(g)
    for t in range(m, len(y)):
        j = t % m
        err = y[t] - (level + trend + season[:, j])
        sse += err * err
        new_level = alpha * (y[t] - season[:, j]) + (1 - alpha) * (level + trend)
        trend = beta * (new_level - level) + (1 - beta) * trend
        season[:, j] = gamma * (y[t] - new_level) + (1 - gamma) * season[:, j]
        level = new_level
    return sse


@dataclass(frozen=True, eq=False)
class HoltWintersModel(FittedModel):
    alpha: float
    beta: float
    gamma: float
    level: float
    trend: float
    season: np.ndarray = field(repr=False)  # indexed by position mod cycle
    n: int  # observations absorbed so far
    method: str = "ets-lite"

    @property
    def cycle(self) -> int:
        return len(self.season)

    def forecast(self, horizon: int) -> np.ndarray:
        steps = np.arange(1, horizon + 1)
        idx = (self.n + steps - 1) % self.cycle
        return self.level + steps * self.trend + self.season[idx]

    def extend(self, value: float) -> HoltWintersModel:
        j = self.n % self.cycle
        level = self.alpha * (value - self.season[j]) + (1 - self.alpha) * (self.level + self.trend)
        trend = self.beta * (level - self.level) + (1 - self.beta) * self.trend
        season = self.season.copy()
        season[j] = self.gamma * (value - level) + (1 - self.gamma) * season[j]
        return HoltWintersModel(self.alpha, self.beta, self.gamma, level, trend,
                                season, self.n + 1, self.method)


def fit_ets_lite(train: TimeSeries) -> HoltWintersModel:
    m = train.cycle
    y = require_length(train, 2 * m, "ets-lite")
    combos = np.array(list(itertools.product(GRID, GRID, GRID)))
    sse = _grid_sse(y, m, combos[:, 0], combos[:, 1], combos[:, 2])
    alpha, beta, gamma = (float(v) for v in combos[int(np.argmin(sse))])

    level, trend, season = initial_state(y, m)
    model = HoltWintersModel(alpha, beta, gamma, level, trend, season, m)
    for value in y[m:]:
        model = model.extend(float(value))
    return model
