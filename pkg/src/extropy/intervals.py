"""Interval-number statistical models and interval similarity.

A class is summarized, per feature, by the [min, max] interval of its
training values. A scalar observation is compared against those intervals
with a width-aware distance; the resulting similarities, normalized across
classes, give one probability distribution per feature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError
from .measures import ProbabilityVector

__all__ = [
    "Interval",
    "IntervalModel",
    "DEFAULT_GAMMA",
    "interval_distance",
    "interval_similarity",
    "feature_distribution",
    "build_interval_model",
]

# Support coefficient used when none is given; sharpens similarity vs distance.
DEFAULT_GAMMA = 5.0


@dataclass(frozen=True)
class Interval:
    """A closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValidationError(f"range: interval bounds must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValidationError(f"range: interval lower bound {self.lo} exceeds upper bound {self.hi}")

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0

    @property
    def half_width(self) -> float:
        return (self.hi - self.lo) / 2.0


class IntervalModel:
    """A complete class x feature grid of intervals.

    ``classes`` and ``features`` fix the ordering used by every downstream
    probability vector. The grid is given as a mapping ``{class: {feature:
    Interval}}`` or as a nested sequence in (class, feature) order.
    """

    __slots__ = ("classes", "features", "_grid", "_lo", "_hi")

    def __init__(self, classes: Sequence[str], features: Sequence[str], table) -> None:
        classes = tuple(classes)
        features = tuple(features)
        if len(set(classes)) != len(classes) or not classes:
            raise ValidationError(f"labels: class labels must be unique and non-empty, got {classes!r}")
        if len(set(features)) != len(features) or not features:
            raise ValidationError(f"labels: feature labels must be unique and non-empty, got {features!r}")
        grid: list[tuple[Interval, ...]] = []
        for i, c in enumerate(classes):
            row: list[Interval] = []
            for j, f in enumerate(features):
                try:
                    cell = table[c][f] if isinstance(table, dict) else table[i][j]
                except (KeyError, IndexError):
                    raise ValidationError(f"grid: missing interval for class {c!r}, feature {f!r}") from None
                if not isinstance(cell, Interval):
                    cell = Interval(*cell)
                row.append(cell)
            grid.append(tuple(row))
        self.classes = classes
        self.features = features
        self._grid = tuple(grid)
        self._lo = np.array([[iv.lo for iv in row] for row in grid], dtype=np.float64)
        self._hi = np.array([[iv.hi for iv in row] for row in grid], dtype=np.float64)

    def interval(self, cls: str, feature: str) -> Interval:
        return self._grid[self._class_index(cls)][self._feature_index(feature)]

    def _class_index(self, cls: str) -> int:
        try:
            return self.classes.index(cls)
        except ValueError:
            raise ValidationError(f"labels: unknown class {cls!r}; model has {self.classes}") from None

    def _feature_index(self, feature: str) -> int:
        try:
            return self.features.index(feature)
        except ValueError:
            raise ValidationError(f"labels: unknown feature {feature!r}; model has {self.features}") from None

    def feature_bounds(self, feature: str) -> tuple[np.ndarray, np.ndarray]:
        """(lows, highs) across classes for one feature, in class order."""
        j = self._feature_index(feature)
        return self._lo[:, j], self._hi[:, j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalModel):
            return NotImplemented
        return (
            self.classes == other.classes
            and self.features == other.features
            and self._grid == other._grid
        )

    def __repr__(self) -> str:
        return f"IntervalModel(classes={self.classes!r}, features={self.features!r})"


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not math.isfinite(gamma) or gamma <= 0.0:
        raise ValidationError(f"range: support coefficient gamma must be positive, got {gamma!r}")
    return gamma


def interval_distance(a: Interval, b: Interval) -> float:
    """Width-aware distance between two intervals.

    D^2 = (midpoint gap)^2 + (half-width(a)^2 + half-width(b)^2) / 3.
    Symmetric and non-negative, but D(a, a) > 0 whenever ``a`` has positive
    width, so this is not a metric in the identity-of-indiscernibles sense.
    """
    gap = a.midpoint - b.midpoint
    return math.sqrt(gap * gap + (a.half_width**2 + b.half_width**2) / 3.0)


def interval_similarity(a: Interval, b: Interval, gamma: float = DEFAULT_GAMMA) -> float:
    """Similarity 1 / (1 + gamma * D(a, b)); in (0, 1], 1 iff D = 0."""
    gamma = _check_gamma(gamma)
    return 1.0 / (1.0 + gamma * interval_distance(a, b))


def feature_distribution(
    model: IntervalModel,
    feature: str,
    sample_value: float,
    gamma: float = DEFAULT_GAMMA,
) -> ProbabilityVector:
    """Class-probability distribution for one observed feature value.

    The scalar observation is treated as the degenerate interval
    [value, value]; its similarity to every class interval is computed and
    the similarities are normalized across classes (model class order).
    """
    gamma = _check_gamma(gamma)
    sample_value = float(sample_value)
    if not math.isfinite(sample_value):
        raise ValidationError(f"range: sample value for {feature!r} must be finite, got {sample_value!r}")
    lo, hi = model.feature_bounds(feature)
    gap = (lo + hi) / 2.0 - sample_value
    half_width = (hi - lo) / 2.0
    dist = np.sqrt(gap * gap + half_width * half_width / 3.0)
    sims = 1.0 / (1.0 + gamma * dist)
    total = sims.sum()
    if total <= 0.0:  # unreachable for finite inputs; similarities are positive
        raise ValidationError("sum: total similarity is zero, cannot normalize")
    return ProbabilityVector(sims / total)


def build_interval_model(
    samples: Iterable[tuple[Sequence[float], str]],
    classes: Sequence[str],
    features: Sequence[str],
) -> IntervalModel:
    """Build the min/max interval grid from labeled feature vectors.

    ``samples`` yields (feature_values, class_label) pairs with values
    aligned to ``features``. Every class must contribute at least one
    sample; the result does not depend on sample order within a class.
    """
    classes = tuple(classes)
    features = tuple(features)
    per_class: dict[str, list[np.ndarray]] = {c: [] for c in classes}
    for values, label in samples:
        if label not in per_class:
            raise ValidationError(f"labels: sample label {label!r} not among classes {classes}")
        row = np.asarray(values, dtype=np.float64)
        if row.shape != (len(features),):
            raise ValidationError(
                f"shape: sample for class {label!r} has {row.size} values, expected {len(features)}"
            )
        per_class[label].append(row)
    table: dict[str, dict[str, Interval]] = {}
    for c in classes:
        if not per_class[c]:
            raise ValidationError(f"grid: class {c!r} has no samples, cannot form intervals")
        block = np.vstack(per_class[c])
        lows, highs = block.min(axis=0), block.max(axis=0)
        table[c] = {f: Interval(float(lo), float(hi)) for f, lo, hi in zip(features, lows, highs)}
    return IntervalModel(classes, features, table)
