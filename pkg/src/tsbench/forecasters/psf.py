"""Pattern sequence-based forecasting.

Whole seasonal cycles are clustered with k-means, the series becomes a
sequence of cluster labels, and the next cycle is predicted as the mean of
the cycles that followed earlier occurrences of the most recent label
window. The window shrinks until a match is found; with no match at all
the mean of every cycle is used.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from sklearn.cluster import KMeans
from sklearn.exceptions import ConvergenceWarning
from sklearn.metrics import silhouette_score

from ..timeseries import TimeSeries
from .base import FittedModel, require_length

MAX_WINDOW = 5
K_RANGE = range(2, 11)
N_INIT = 25


def normalize(x, lo: float, hi: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if hi == lo:
        return x - lo + 0.5
    return (x - lo) / (hi - lo)


def denormalize(v, lo: float, hi: float) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if hi == lo:
        return v - 0.5 + lo
    return v * (hi - lo) + lo


def cluster_cycles(cycles: np.ndarray, seed: int = 0, n_init: int = N_INIT,
                   k_range=K_RANGE) -> tuple[np.ndarray, np.ndarray]:
    """K-means over cycle vectors with k chosen by the best silhouette score.

    Returns ``(centroids, labels)``. Fewer than two distinct cycles collapse
    to a single cluster.
    """
    n = len(cycles)
    distinct = len(np.unique(cycles, axis=0))
    if distinct < 2:
        return cycles.mean(axis=0, keepdims=True), np.zeros(n, dtype=int)
    best = None
    for k in k_range:
        if k > min(distinct, n - 1):
            break
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            km = KMeans(n_clusters=k, n_init=n_init, random_state=seed).fit(cycles)
        if len(np.unique(km.labels_)) < 2:
            continue
        score = silhouette_score(cycles, km.labels_)
        if best is None or score > best[0]:
            best = (score, km.cluster_centers_, km.labels_)
    if best is None:
        return cycles.mean(axis=0, keepdims=True), np.zeros(n, dtype=int)
    return np.asarray(best[1]), np.asarray(best[2], dtype=int)


def match_next_cycle(labels, cycles: np.ndarray, max_window: int = MAX_WINDOW) -> np.ndarray:
    """Predict the cycle after ``cycles[-1]`` from label-window matches."""
    labels = list(labels)
    n = len(labels)
    for w in range(min(max_window, n - 1), 0, -1):
        suffix = labels[n - w:]
        # a match must end before the last cycle so that a successor exists
        hits = [end for end in range(w - 1, n - 1) if labels[end - w + 1:end + 1] == suffix]
        if hits:
            return cycles[[end + 1 for end in hits]].mean(axis=0)
    return cycles.mean(axis=0)


def nearest_label(centroids: np.ndarray, vector: np.ndarray) -> int:
    return int(np.argmin(np.sum((centroids - vector) ** 2, axis=1)))


@dataclass(frozen=True, eq=False)
class PsfModel(FittedModel):
    lo: float
    hi: float
    centroids: np.ndarray = field(repr=False)
    cycles: np.ndarray = field(repr=False)  # normalized complete cycles
    labels: tuple[int, ...]
    partial: tuple[float, ...] = ()  # normalized values after the last complete cycle
    max_window: int = MAX_WINDOW
    method: str = "psf"

    @property
    def cycle(self) -> int:
        return self.cycles.shape[1]

    @property
    def k(self) -> int:
        return len(self.centroids)

    def forecast(self, horizon: int) -> np.ndarray:
        labels = list(self.labels)
        cycles = self.cycles
        need = len(self.partial) + horizon
        predicted = []
        while len(predicted) * self.cycle < need:
            nxt = match_next_cycle(labels, cycles, self.max_window)
            predicted.append(nxt)
            cycles = np.vstack([cycles, nxt])
            labels.append(nearest_label(self.centroids, nxt))
        flat = np.concatenate(predicted)[len(self.partial):need]
        return denormalize(flat, self.lo, self.hi)

    def extend(self, value: float) -> PsfModel:
        partial = self.partial + (float(normalize(value, self.lo, self.hi)),)
        cycles, labels = self.cycles, self.labels
        if len(partial) == self.cycle:
            full = np.array(partial)
            cycles = np.vstack([cycles, full])
            labels = labels + (nearest_label(self.centroids, full),)
            partial = ()
        return PsfModel(self.lo, self.hi, self.centroids, cycles, labels, partial,
                        self.max_window, self.method)


def fit_psf(train: TimeSeries, seed: int = 0, n_init: int = N_INIT) -> PsfModel:
    m = train.cycle
    y = require_length(train, 3 * m, "psf")
    lo, hi = float(y.min()), float(y.max())
    y = y[len(y) % m:]
    cycles = normalize(y, lo, hi).reshape(-1, m)
    centroids, labels = cluster_cycles(cycles, seed=seed, n_init=n_init)
    return PsfModel(lo, hi, centroids, cycles, tuple(int(v) for v in labels))
