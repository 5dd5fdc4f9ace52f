"""Multi-step forecast drivers."""

from __future__ import annotations

import enum

import numpy as np

from .errors import ForecastStepError, TsBenchError, UnsupportedStrategyError
from .forecasters.base import ForecasterSpec
from .timeseries import TimeSeries


class Strategy(str, enum.Enum):
    RECURSIVE = "recursive"
    DIRREC = "dirrec"

    @classmethod
    def parse(cls, value) -> Strategy:
        if isinstance(value, Strategy):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UnsupportedStrategyError(
                f"unknown strategy {value!r} (expected recursive or dirrec)"
            ) from None


def _checked(values, horizon: int, method: str) -> np.ndarray:
    out = np.asarray(values, dtype=float).ravel()
    if out.shape != (horizon,):
        raise TsBenchError(f"{method} returned {out.size} values, expected {horizon}")
    if not np.all(np.isfinite(out)):
        raise TsBenchError(f"{method} returned non-finite forecasts")
    return out


def _one_step(model, method: str) -> float:
    return float(_checked(model.forecast(1), 1, method)[0])


def forecast_with_strategy(spec: ForecasterSpec, train: TimeSeries, nval: int,
                           strategy: Strategy | str = Strategy.RECURSIVE) -> np.ndarray:
    """Produce ``nval`` forecasts one step at a time.

    Recursive fits once and feeds each prediction back through
    ``FittedModel.extend``. DirRec refits on the lengthened series before
    every step.
    """
    strategy = Strategy.parse(strategy)
    if strategy is Strategy.DIRREC and not spec.supports_refit:
        raise UnsupportedStrategyError(f"{spec.name} does not support the dirrec strategy")
    out = np.empty(nval)
    series = train
    model = None
    for step in range(1, nval + 1):
        try:
            if model is None or strategy is Strategy.DIRREC:
                model = spec.fit(series)
            value = _one_step(model, spec.name)
        except Exception as exc:
            raise ForecastStepError(step, exc) from exc
        out[step - 1] = value
        if strategy is Strategy.DIRREC:
            series = series.append(value)
        else:
            model = model.extend(value)
    return out


def one_shot_forecast(spec: ForecasterSpec, train: TimeSeries, nval: int) -> np.ndarray:
    """Fit once and ask the model for all ``nval`` values directly."""
    return _checked(spec.fit(train).forecast(nval), nval, spec.name)
