"""Pluggable forecasters and the built-in methods."""

from functools import partial

from .ar import ArModel, fit_ar_lite
from .base import (
    FittedModel,
    ForecasterRegistry,
    ForecasterSpec,
    FunctionModel,
    register_forecaster,
)
from .baselines import fit_drift, fit_mean, fit_seasonal_naive
from .ets import HoltWintersModel, fit_ets_lite
from .psf import PsfModel, fit_psf
from ..errors import UnknownMethodError

_DESCRIPTIONS = {
    "seasonal-naive": ("Seasonal naive", "repeat the last observed cycle"),
    "mean": ("Mean", "historical mean"),
    "drift": ("Drift", "line through first and last observation"),
    "ar-lite": ("AR-lite", "AR(p) with KPSS differencing and AIC order selection"),
    "ets-lite": ("ETS-lite", "additive Holt-Winters, grid-searched smoothing"),
    "psf": ("PSF", "pattern sequence forecast over k-means cycle labels"),
}

BUILTIN_NAMES = tuple(_DESCRIPTIONS)


def builtin_forecaster(name: str, seed: int = 0) -> ForecasterSpec:
    """Return the spec for a built-in method; ``seed`` drives psf's k-means."""
    fits = {
        "seasonal-naive": fit_seasonal_naive,
        "mean": fit_mean,
        "drift": fit_drift,
        "ar-lite": fit_ar_lite,
        "ets-lite": fit_ets_lite,
        "psf": partial(fit_psf, seed=seed),
    }
    if name not in fits:
        raise UnknownMethodError(f"unknown method {name!r}")
    display, description = _DESCRIPTIONS[name]
    return ForecasterSpec(name, fits[name], display, description=description)


def default_forecasters(seed: int = 0) -> ForecasterRegistry:
    return ForecasterRegistry([builtin_forecaster("ar-lite", seed), builtin_forecaster("psf", seed)])


__all__ = [
    "ArModel", "BUILTIN_NAMES", "FittedModel", "ForecasterRegistry", "ForecasterSpec",
    "FunctionModel", "HoltWintersModel", "PsfModel", "builtin_forecaster",
    "default_forecasters", "fit_ar_lite", "fit_drift", "fit_ets_lite", "fit_mean",
    "fit_psf", "fit_seasonal_naive", "register_forecaster",
]
