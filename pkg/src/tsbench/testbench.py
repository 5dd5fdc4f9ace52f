"""Evaluation engine: hold-out comparison, incremental updates and Monte-Carlo runs."""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError, DuplicateMethodError, UnknownMethodError
from .forecasters import ForecasterRegistry, ForecasterSpec, default_forecasters
from .metrics import EXEC_TIME, MetricRegistry, default_metrics
from .strategies import Strategy, forecast_with_strategy, one_shot_forecast
from .timeseries import SplitSpec, TimeSeries, holdout_split, random_patch


@dataclass(frozen=True, eq=False)
class EvaluationConfig:
    series: TimeSeries
    nval: int = 12
    dval: int | None = None
    metrics: MetricRegistry = field(default_factory=default_metrics)
    methods: ForecasterRegistry = field(default_factory=default_forecasters)
    strategy: Strategy = Strategy.RECURSIVE
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.methods, ForecasterRegistry):
            object.__setattr__(self, "methods", ForecasterRegistry(self.methods))
        if not isinstance(self.metrics, MetricRegistry):
            object.__setattr__(self, "metrics", MetricRegistry(self.metrics))
        object.__setattr__(self, "strategy", Strategy.parse(self.strategy))

    @property
    def split(self) -> SplitSpec:
        return SplitSpec(self.nval, self.dval)

    @property
    def resolved_dval(self) -> int:
        return len(self.series) if self.dval is None else self.dval

    def validate(self) -> None:
        self.split.resolve(len(self.series))
        if len(self.methods) == 0:
            raise ConfigError("at least one method is required")
        if len(self.metrics) == 0:
            raise ConfigError("at least one metric is required")

    def echo(self) -> dict:
        return {
            "series": self.series.name,
            "cycle": self.series.cycle,
            "nval": self.nval,
            "dval": self.resolved_dval,
            "strategy": self.strategy.value,
            "seed": self.seed,
            "metrics": list(self.metrics.names),
            "methods": list(self.methods.names),
        }


@dataclass(frozen=True, eq=False)
class MethodRow:
    """One method's outcome. ``error`` is set (and the rest empty) when it failed.

    Metric cells hold NaN when the metric is undefined for the test values.
    """

    method: str
    metrics: dict[str, float] = field(default_factory=dict)
    exec_time: float = 0.0
    forecast: np.ndarray | None = field(default=None, repr=False)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True, eq=False)
class EvaluationResult:
    config: EvaluationConfig
    test: np.ndarray = field(repr=False)
    rows: tuple[MethodRow, ...]

    @property
    def methods(self) -> tuple[str, ...]:
        return tuple(r.method for r in self.rows)

    @property
    def columns(self) -> tuple[str, ...]:
        return self.config.metrics.columns

    def row(self, method: str) -> MethodRow:
        for r in self.rows:
            if r.method == method:
                return r
        raise UnknownMethodError(f"unknown method {method!r}")

    @property
    def error_table(self) -> dict[str, dict[str, float]]:
        """method -> {metric..., exec_time} for every method that succeeded."""
        return {r.method: {**r.metrics, EXEC_TIME: r.exec_time} for r in self.rows if r.ok}

    @property
    def predicted_table(self) -> dict[str, np.ndarray]:
        """``"Test values"`` row followed by one forecast row per successful method."""
        table = {"Test values": self.test}
        table.update((r.method, r.forecast) for r in self.rows if r.ok)
        return table

    @property
    def failures(self) -> dict[str, str]:
        return {r.method: r.error for r in self.rows if not r.ok}

    def without_timing(self) -> EvaluationResult:
        rows = tuple(replace(r, exec_time=0.0) for r in self.rows)
        return replace(self, rows=rows)


def score(metrics: MetricRegistry, test, forecast) -> dict[str, float]:
    cells = {}
    for spec in metrics:
        try:
            cells[spec.name] = spec(test, forecast)
        except ValueError:
            cells[spec.name] = math.nan
    return cells


def _forecast(spec: ForecasterSpec, train: TimeSeries, nval: int, strategy: Strategy):
    if spec.black_box:
        return one_shot_forecast(spec, train, nval)
    return forecast_with_strategy(spec, train, nval, strategy)


def _run_method(spec, train, test, config) -> MethodRow:
    start = time.perf_counter_ns()
    try:
        forecast = _forecast(spec, train, len(test), config.strategy)
    except Exception as exc:  # one bad contestant must not sink the comparison
        return MethodRow(spec.name, error=f"{type(exc).__name__}: {exc}")
    elapsed = max(time.perf_counter_ns() - start, 1) / 1e9
    forecast.setflags(write=False)
    return MethodRow(spec.name, score(config.metrics, test, forecast), elapsed, forecast)


def _run_all(specs: Sequence[ForecasterSpec], train, test, config, jobs: int) -> list[MethodRow]:
    if jobs > 1 and len(specs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda s: _run_method(s, train, test, config), specs))
    return [_run_method(s, train, test, config) for s in specs]


def evaluate(config: EvaluationConfig, jobs: int = 1) -> EvaluationResult:
    """Fit every configured method on the training split and score it on the test split."""
    config.validate()
    train, test = holdout_split(config.series, config.split)
    rows = _run_all(list(config.methods), train, test.values, config, jobs)
    return EvaluationResult(config, test.values, tuple(rows))


def append_methods(result: EvaluationResult, new_methods: Iterable[ForecasterSpec],
                   jobs: int = 1) -> EvaluationResult:
    """Evaluate only ``new_methods`` and add their rows; existing rows are reused as-is."""
    new_methods = list(new_methods)
    if not new_methods:
        return result
    registry = result.config.methods
    for spec in new_methods:
        if spec.name in registry:
            raise DuplicateMethodError(f"method {spec.name!r} is already in the result")
        registry = registry.register(spec)
    config = replace(result.config, methods=registry)
    train, test = holdout_split(config.series, config.split)
    rows = _run_all(new_methods, train, test.values, config, jobs)
    return EvaluationResult(config, result.test, result.rows + tuple(rows))


def select_methods(result: EvaluationResult, keep: Iterable[str]) -> EvaluationResult:
    """Keep only the named methods, preserving their original order."""
    keep = list(keep)
    for name in keep:
        if name not in result.methods:
            raise UnknownMethodError(f"unknown method {name!r}")
    wanted = set(keep)
    methods = ForecasterRegistry([s for s in result.config.methods if s.name in wanted])
    config = replace(result.config, methods=methods)
    return EvaluationResult(config, result.test, tuple(r for r in result.rows if r.method in wanted))


@dataclass(frozen=True)
class MonteCarloRow:
    start: int  # 1-based index of the patch in the source series
    values: dict[str, float | None]  # None where the method failed on this patch


@dataclass(frozen=True, eq=False)
class MonteCarloResult:
    config: EvaluationConfig
    size: int
    metric: str
    rows: tuple[MonteCarloRow, ...]
    mean: dict[str, float | None]
    results: tuple[EvaluationResult, ...] | None = None  # per-iteration, when requested

    @property
    def methods(self) -> tuple[str, ...]:
        return self.config.methods.names

    @property
    def missing(self) -> dict[str, int]:
        """Number of iterations in which each method produced no value."""
        return {m: sum(r.values[m] is None for r in self.rows) for m in self.methods}


def monte_carlo(config: EvaluationConfig, size: int, iterations: int,
                report_forecasts: bool = False, report_each: bool = False,
                chart_dir: str | Path | None = None, jobs: int = 1) -> MonteCarloResult:
    """Evaluate every method on ``iterations`` random patches of length ``size``.

    Each patch is split like a full evaluation (last ``nval`` values held
    out) and scored with the first configured metric. Start indices are all
    drawn up front from a generator seeded with ``config.seed``.
    """
    if iterations < 1:
        raise ConfigError(f"iterations must be >= 1, got {iterations}")
    config.validate()
    rng = np.random.default_rng(config.seed)
    patches = [random_patch(config.series, size, rng) for _ in range(iterations)]
    SplitSpec(config.nval, size).resolve(size)
    metric = config.metrics.names[0]

    rows, results = [], []
    for i, patch in enumerate(patches, start=1):
        series = config.series.with_values(patch.values)
        sub = replace(config, series=series, dval=None)
        result = evaluate(sub, jobs=jobs)
        values = {}
        for r in result.rows:
            value = r.metrics.get(metric) if r.ok else None
            values[r.method] = None if value is None or math.isnan(value) else value
        rows.append(MonteCarloRow(patch.start_index, values))
        results.append(result)
        if report_each and chart_dir is not None:
            from .report.svg import render_comparison_chart

            path = Path(chart_dir) / f"iteration_{i:03d}.svg"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(render_comparison_chart(result), encoding="utf-8")

    mean = {}
    for name in config.methods.names:
        column = [r.values[name] for r in rows if r.values[name] is not None]
        mean[name] = float(np.mean(column)) if column else None
    return MonteCarloResult(config, size, metric, tuple(rows), mean,
                            tuple(results) if report_forecasts else None)
