"""Forecast error metrics and the ordered metric registry.

Every metric takes ``(obs, pred)`` vectors of equal length and returns a
nonnegative float. ``exec_time`` is not a metric: the testbench records it
as a reserved final column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import (
    EmptyInputError,
    LengthMismatchError,
    UnknownNameError,
    ZeroObservationError,
    ZeroVarianceError,
)
from .registry import Registry

EXEC_TIME = "exec_time"


def _pair(obs, pred, min_len=1):
    obs = np.asarray(obs, dtype=float)
    pred = np.asarray(pred, dtype=float)
    if obs.shape != pred.shape:
        raise LengthMismatchError(f"obs has {obs.size} values, pred has {pred.size}")
    if obs.size < min_len:
        raise EmptyInputError(f"need at least {min_len} values, got {obs.size}")
    return obs, pred


def rmse(obs, pred) -> float:
    """Root mean squared error."""
    obs, pred = _pair(obs, pred)
    return float(np.sqrt(np.mean((obs - pred) ** 2)))


def mae(obs, pred) -> float:
    """Mean absolute error."""
    obs, pred = _pair(obs, pred)
    return float(np.mean(np.abs(obs - pred)))


def mape(obs, pred) -> float:
    """Mean absolute percentage error, in percent.

    Raises ZeroObservationError if any observation is exactly zero.
    """
    obs, pred = _pair(obs, pred)
    if np.any(obs == 0):
        raise ZeroObservationError("MAPE is undefined when an observation is zero")
    return float(np.mean(np.abs(obs - pred) / np.abs(obs)) * 100)


# Above this ratio of (ss_obs + ss_pred) to |ss_obs - ss_pred| the float
# difference loses too many digits and pcv switches to exact arithmetic.
_PCV_EXACT_CONDITION = 100.0


def _exact_ss(x) -> Fraction:
    values = [Fraction(v) for v in x.tolist()]
    mean = sum(values) / len(values)
    return sum((v - mean) ** 2 for v in values)


def pcv(obs, pred) -> float:
    """Percentage change in variance, using the sample (N-1) variance.

    The N-1 factors cancel, so this is ``|SS(obs) - SS(pred)| / SS(obs)``
    with SS the sum of squared deviations. The difference is taken as
    ``sum((a - b) * (a + b))`` over the centred vectors, and recomputed
    exactly when the two sums nearly cancel.
    """
    obs, pred = _pair(obs, pred, min_len=2)
    if np.all(obs == obs[0]):
        raise ZeroVarianceError("PCV is undefined when the observations have zero variance")
    a = obs - obs.mean()
    b = pred - pred.mean()
    ss_obs = float(np.sum(a * a))
    diff = abs(float(np.sum((a - b) * (a + b))))
    if diff * _PCV_EXACT_CONDITION < ss_obs + float(np.sum(b * b)):
        ss_exact = _exact_ss(obs)
        return float(abs(ss_exact - _exact_ss(pred)) * 100 / ss_exact)
    return diff * 100 / ss_obs


@dataclass(frozen=True)
class MetricSpec:
    name: str
    fn: Callable[..., float]
    display_name: str = ""
    description: str = ""

    def __post_init__(self):
        if not self.display_name:
            object.__setattr__(self, "display_name", self.name)

    def __call__(self, obs, pred) -> float:
        return float(self.fn(obs, pred))


class MetricRegistry(Registry[MetricSpec]):
    @property
    def columns(self) -> tuple[str, ...]:
        """Report column order: registered metrics, then exec_time."""
        return self.names + (EXEC_TIME,)


RMSE = MetricSpec("RMSE", rmse, "RMSE", "root mean squared error")
MAE = MetricSpec("MAE", mae, "MAE", "mean absolute error")
MAPE = MetricSpec("MAPE", mape, "MAPE", "mean absolute percentage error (%)")
PCV = MetricSpec("PCV", pcv, "PCV", "percentage change in variance (%)")

BUILTIN_METRICS = {m.name: m for m in (RMSE, MAE, MAPE, PCV)}


def default_metrics() -> MetricRegistry:
    return MetricRegistry([RMSE, MAE, MAPE])


def register_metric(registry: MetricRegistry, spec: MetricSpec) -> MetricRegistry:
    if spec.name == EXEC_TIME:
        raise ValueError(f"{EXEC_TIME!r} is a reserved column")
    return registry.register(spec)


def builtin_metric(name: str) -> MetricSpec:
    for key, spec in BUILTIN_METRICS.items():
        if key.lower() == name.lower():
            return spec
    raise UnknownNameError(f"unknown metric {name!r}")


def metrics_from_names(names) -> MetricRegistry:
    registry = MetricRegistry()
    for name in names:
        registry = register_metric(registry, builtin_metric(name))
    return registry
