"""Univariate series container, CSV ingestion, fixtures and splitting."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _data
from .errors import (
    InvalidSplitError,
    MissingColumnError,
    PatchTooLargeError,
    UnknownDatasetError,
    UnparseableValueError,
)

_MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError("series values must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ValueError("series values must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """An immutable univariate series with its seasonal cycle length.

    ``values`` is stored as a read-only float array. ``cycle`` is the number
    of observations per season (12 for monthly data).
    """

    values: np.ndarray
    cycle: int = 1
    name: str = ""
    origin_label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values))
        if int(self.cycle) != self.cycle or self.cycle < 1:
            raise ValueError(f"cycle must be a positive integer, got {self.cycle!r}")
        object.__setattr__(self, "cycle", int(self.cycle))

    def __len__(self) -> int:
        return len(self.values)

    def with_values(self, values, origin_label: str | None = None) -> TimeSeries:
        return TimeSeries(values, self.cycle, self.name, origin_label)

    def append(self, value: float) -> TimeSeries:
        return self.with_values(np.append(self.values, value), self.origin_label)


@dataclass(frozen=True)
class SplitSpec:
    """Hold-out split: ``dval`` trailing values are used, the last ``nval`` are scored.

    ``dval=None`` means the full series length.
    """

    nval: int = 12
    dval: int | None = None

    def resolve(self, length: int) -> tuple[int, int]:
        dval = length if self.dval is None else self.dval
        nval = self.nval
        if nval < 1:
            raise InvalidSplitError(f"nval must be >= 1, got {nval}")
        if dval < 1 or dval > length:
            raise InvalidSplitError(f"dval must be in [1, {length}], got {dval}")
        if dval - nval < 1:
            raise InvalidSplitError(
                f"dval - nval must leave at least one training value (dval={dval}, nval={nval})"
            )
        return dval, nval


@dataclass(frozen=True, eq=False)
class Patch:
    start_index: int  # 1-based
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values))


def holdout_split(ts: TimeSeries, split: SplitSpec) -> tuple[TimeSeries, TimeSeries]:
    """Split the trailing ``dval`` observations into train and the last ``nval`` test values."""
    dval, nval = split.resolve(len(ts))
    window = ts.values[len(ts) - dval:]
    train = TimeSeries(window[:-nval], ts.cycle, ts.name)
    test = TimeSeries(window[-nval:], ts.cycle, ts.name)
    return train, test


def random_patch(ts: TimeSeries, size: int, rng: np.random.Generator) -> Patch:
    """Draw a contiguous slice of ``size`` values at a uniformly random start."""
    n = len(ts)
    if size < 1:
        raise InvalidSplitError(f"patch size must be >= 1, got {size}")
    if size > n:
        raise PatchTooLargeError(f"patch size {size} exceeds series length {n}")
    start = int(rng.integers(1, n - size + 2))
    return Patch(start, ts.values[start - 1:start - 1 + size])


def _parse_cell(cell: str, line: int) -> float:
    text = cell.strip()
    try:
        value = float(text)
    except ValueError:
        raise UnparseableValueError(line, cell) from None
    if not math.isfinite(value):
        raise UnparseableValueError(line, cell)
    return value


def load_csv(path: str | os.PathLike, value_column: str, cycle: int = 1,
             name: str | None = None) -> TimeSeries:
    """Read one numeric column of a headed, comma-separated UTF-8 file.

    Missing or non-numeric cells are rejected; nothing is imputed. Error
    rows are reported as file line numbers (the header is line 1).
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise MissingColumnError(value_column, ())
        header = [h.strip() for h in header]
        if value_column not in header:
            raise MissingColumnError(value_column, header)
        col = header.index(value_column)
        label_col = header.index("period") if "period" in header else None
        values = []
        origin = None
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            cell = row[col] if col < len(row) else ""
            values.append(_parse_cell(cell, line))
            if origin is None and label_col is not None and label_col < len(row):
                origin = row[label_col].strip() or None
    return TimeSeries(values, cycle, name if name is not None else path.stem, origin)


def write_csv(ts: TimeSeries, path: str | os.PathLike, value_column: str = "value",
              periods: Sequence[str] | None = None) -> None:
    """Write ``ts`` as (period, value) rows at full float precision."""
    if periods is None:
        periods = [str(i) for i in range(1, len(ts) + 1)]
    if len(periods) != len(ts):
        raise ValueError("periods must match the series length")
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["period", value_column])
        for label, value in zip(periods, ts.values):
            writer.writerow([label, repr(float(value))])


def monthly_labels(start_year: int, count: int) -> list[str]:
    return [f"{start_year + i // 12}-{_MONTHS[i % 12]}" for i in range(count)]


_BUILTINS = {
    "nottem": (_data.NOTTEM, _data.NOTTEM_START_YEAR, "temp"),
    "airpassengers": (_data.AIRPASSENGERS, _data.AIRPASSENGERS_START_YEAR, "passengers"),
}


def builtin_names() -> tuple[str, ...]:
    return tuple(_BUILTINS)


def builtin_column(name: str) -> str:
    """Value column used when the fixture is written to CSV."""
    try:
        return _BUILTINS[name.lower()][2]
    except KeyError:
        raise UnknownDatasetError(name) from None


def builtin_dataset(name: str) -> TimeSeries:
    """Return one of the embedded monthly fixtures (``nottem``, ``airpassengers``)."""
    key = name.lower()
    try:
        values, year, _ = _BUILTINS[key]
    except KeyError:
        raise UnknownDatasetError(name) from None
    return TimeSeries(values, 12, key, f"{year}-Jan")


def as_series(values: Iterable[float] | TimeSeries, cycle: int = 1, name: str = "") -> TimeSeries:
    if isinstance(values, TimeSeries):
        return values
    return TimeSeries(list(values), cycle, name)
