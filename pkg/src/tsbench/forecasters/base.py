from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..errors import DuplicateMethodError, SeriesTooShortError, UnknownMethodError
from ..registry import Registry
from ..timeseries import TimeSeries


class FittedModel(ABC):
    """A fitted forecaster conditioned on a history.

    ``extend`` lengthens the conditioning history by one observation and
    leaves every fitted parameter untouched.
    """

    method: str

    @abstractmethod
    def forecast(self, horizon: int) -> np.ndarray: ...

    @abstractmethod
    def extend(self, value: float) -> FittedModel: ...


@dataclass(frozen=True)
class ForecasterSpec:
    """Registry entry binding a method name to its fit procedure.

    ``black_box`` methods are opaque ``fn(data, nval)`` callables; the
    testbench forecasts them in one shot instead of through a strategy.
    """

    name: str
    fit: Callable[[TimeSeries], FittedModel] = field(repr=False)
    display_name: str = ""
    supports_refit: bool = True
    black_box: bool = False
    description: str = ""

    def __post_init__(self):
        if not self.display_name:
            object.__setattr__(self, "display_name", self.name)

    @classmethod
    def from_function(cls, name: str, fn: Callable[[np.ndarray, int], Sequence[float]],
                      display_name: str = "", description: str = "") -> ForecasterSpec:
        """Wrap a user forecasting function ``fn(data, nval) -> values``."""

        def fit(train: TimeSeries) -> FittedModel:
            return FunctionModel(name, fn, np.asarray(train.values, dtype=float), train.cycle)

        return cls(name, fit, display_name, supports_refit=False, black_box=True,
                   description=description or "user-supplied function")


@dataclass(frozen=True, eq=False)
class FunctionModel(FittedModel):
    method: str
    fn: Callable[[np.ndarray, int], Sequence[float]] = field(repr=False)
    history: np.ndarray = field(repr=False)
    cycle: int = 1

    def forecast(self, horizon: int) -> np.ndarray:
        out = np.asarray(self.fn(self.history.copy(), horizon), dtype=float).ravel()
        return out

    def extend(self, value: float) -> FunctionModel:
        return FunctionModel(self.method, self.fn, np.append(self.history, value), self.cycle)


class ForecasterRegistry(Registry[ForecasterSpec]):
    error_type = DuplicateMethodError
    unknown_type = UnknownMethodError


def register_forecaster(registry: ForecasterRegistry, spec: ForecasterSpec) -> ForecasterRegistry:
    return registry.register(spec)


def require_length(train: TimeSeries, minimum: int, method: str) -> np.ndarray:
    y = np.asarray(train.values, dtype=float)
    if len(y) < minimum:
        raise SeriesTooShortError(f"{method} needs at least {minimum} observations, got {len(y)}")
    return y
