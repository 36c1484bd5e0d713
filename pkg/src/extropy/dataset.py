"""Iris data ingestion and training-sample selection.

The canonical 150-row dataset ships with the package as ``data/iris.csv``
(UCI field ordering and values; sha256 pinned below). Rows are
`SL,SW,PL,PW,class` with the class token mapped to the short labels
Se / Ve / Vi.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import ValidationError

__all__ = [
    "CLASSES",
    "FEATURES",
    "CLASS_TOKENS",
    "IRIS_SHA256",
    "EXPECTED_ROWS",
    "LabeledSample",
    "SelectionPolicy",
    "load_iris",
    "serialize_samples",
    "select_training",
    "bundled_iris_path",
]

CLASSES = ("Se", "Ve", "Vi")
FEATURES = ("SL", "SW", "PL", "PW")

# Case-sensitive source-file tokens; anything else is a hard error.
CLASS_TOKENS = {
    "Iris-setosa": "Se",
    "Iris-versicolor": "Ve",
    "Iris-virginica": "Vi",
}
_LABEL_TOKENS = {v: k for k, v in CLASS_TOKENS.items()}

EXPECTED_ROWS = 150

# sha256 of the bundled fixture; tests assert it so silent edits surface.
IRIS_SHA256 = "84417d9fa34d9079993dffca9277e6787511137748a8b3585a5ca8b65c437b0e"


@dataclass(frozen=True)
class LabeledSample:
    """One dataset row: 0-based position, four feature values (cm), label."""

    id: int
    features: tuple[float, float, float, float]
    label: str

    def __post_init__(self):
        if len(self.features) != len(FEATURES):
            raise ValidationError(
                f"shape: sample {self.id} has {len(self.features)} features, expected {len(FEATURES)}"
            )
        if not all(math.isfinite(v) and v > 0 for v in self.features):
            raise ValidationError(f"range: sample {self.id} features must be finite and positive")
        if self.label not in CLASSES:
            raise ValidationError(f"labels: sample {self.id} label {self.label!r} not in {CLASSES}")


@dataclass(frozen=True)
class SelectionPolicy:
    """How many training samples to take per class, and how.

    ``first`` takes each class's first ``per_class_count`` rows in file
    order; ``random`` draws without replacement from one seeded generator,
    consuming classes in order of first appearance, so a given seed always
    yields the same selection.
    """

    per_class_count: int = 40
    strategy: Literal["first", "random"] = "first"
    seed: int = 0

    def __post_init__(self):
        if self.per_class_count < 1:
            raise ValidationError(
                f"range: per-class count must be a positive integer, got {self.per_class_count!r}"
            )
        if self.strategy not in ("first", "random"):
            raise ValidationError(f"labels: unknown selection strategy {self.strategy!r}")


def bundled_iris_path() -> Path:
    """Filesystem path of the packaged canonical dataset."""
    return Path(resources.files("extropy").joinpath("data/iris.csv"))


def load_iris(path: str | Path) -> list[LabeledSample]:
    """Parse a headerless `SL,SW,PL,PW,class` CSV into labeled samples.

    Raises :class:`ValidationError` naming the line for malformed rows or
    unknown class tokens. A row count other than 150 is only warned about,
    so trimmed fixtures remain usable in tests.
    """
    text = Path(path).read_text(encoding="utf-8")
    samples: list[LabeledSample] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 5:
            raise ValidationError(f"shape: line {lineno}: expected 5 comma-separated fields, got {len(fields)}")
        try:
            values = tuple(float(v) for v in fields[:4])
        except ValueError:
            raise ValidationError(f"range: line {lineno}: non-numeric feature value in {fields[:4]!r}") from None
        token = fields[4]
        if token not in CLASS_TOKENS:
            raise ValidationError(f"labels: line {lineno}: unknown class token {token!r}")
        samples.append(LabeledSample(id=len(samples), features=values, label=CLASS_TOKENS[token]))
    if len(samples) != EXPECTED_ROWS:
        warnings.warn(
            f"{path}: expected {EXPECTED_ROWS} rows, parsed {len(samples)}",
            stacklevel=2,
        )
    return samples


def serialize_samples(samples: Iterable[LabeledSample]) -> str:
    """Render samples back to the CSV form accepted by :func:`load_iris`."""
    lines = []
    for s in samples:
        lines.append(",".join(repr(v) for v in s.features) + "," + _LABEL_TOKENS[s.label])
    return "\n".join(lines) + "\n" if lines else ""


def select_training(
    samples: Sequence[LabeledSample],
    policy: SelectionPolicy = SelectionPolicy(),
) -> list[LabeledSample]:
    """Pick the training subset according to ``policy``.

    Returns samples grouped by class (classes in order of first appearance)
    and, within each class, in ascending id order. Never duplicates a
    sample; errors out if any class has fewer rows than requested.
    """
    by_class: dict[str, list[LabeledSample]] = {}
    for s in samples:
        by_class.setdefault(s.label, []).append(s)
    for label, members in by_class.items():
        if len(members) < policy.per_class_count:
            raise ValidationError(
                f"range: class {label!r} has {len(members)} samples, "
                f"fewer than the requested {policy.per_class_count}"
            )
    rng = np.random.default_rng(policy.seed) if policy.strategy == "random" else None
    selected: list[LabeledSample] = []
    for label, members in by_class.items():
        if rng is None:
            chosen = members[: policy.per_class_count]
        else:
            idx = rng.choice(len(members), size=policy.per_class_count, replace=False)
            chosen = [members[i] for i in np.sort(idx)]
        selected.extend(chosen)
    return selected
