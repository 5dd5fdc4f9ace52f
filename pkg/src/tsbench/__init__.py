"""Test-bench for comparing time-series forecasting methods."""

from .forecasters import (
    ForecasterRegistry,
    ForecasterSpec,
    builtin_forecaster,
    default_forecasters,
    register_forecaster,
)
from .metrics import MetricRegistry, MetricSpec, default_metrics, mae, mape, pcv, register_metric, rmse
from .strategies import Strategy, forecast_with_strategy, one_shot_forecast
from .testbench import (
    EvaluationConfig,
    EvaluationResult,
    MonteCarloResult,
    append_methods,
    evaluate,
    monte_carlo,
    select_methods,
)
from .timeseries import SplitSpec, TimeSeries, builtin_dataset, holdout_split, load_csv, random_patch, write_csv

__version__ = "0.1.0"
