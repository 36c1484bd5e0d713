"""Tsallis extropy measures and interval-evidence classification."""

__version__ = "0.1.0"

from .classifier import (
    ClassificationReport,
    Decision,
    classify_sample,
    classify_sample_detailed,
    evaluate,
    extropy_weights,
    fuse,
)
from .dataset import LabeledSample, SelectionPolicy, load_iris, select_training
from .errors import ExtropyError, ValidationError
from .intervals import (
    Interval,
    IntervalModel,
    build_interval_model,
    feature_distribution,
    interval_distance,
    interval_similarity,
)
from .measures import (
    ProbabilityVector,
    binary_tsallis,
    entropy_extropy_difference,
    extropy,
    ordering_threshold,
    ordering_threshold_bounds,
    shannon_entropy,
    sum_identity_gap,
    tsallis_entropy,
    tsallis_extropy,
    uniform_tsallis_extropy,
)

__all__ = [
    "__version__",
    "ExtropyError",
    "ValidationError",
    "ProbabilityVector",
    "shannon_entropy",
    "extropy",
    "tsallis_entropy",
    "tsallis_extropy",
    "binary_tsallis",
    "sum_identity_gap",
    "uniform_tsallis_extropy",
    "entropy_extropy_difference",
    "ordering_threshold",
    "ordering_threshold_bounds",
    "Interval",
    "IntervalModel",
    "interval_distance",
    "interval_similarity",
    "feature_distribution",
    "build_interval_model",
    "LabeledSample",
    "SelectionPolicy",
    "load_iris",
    "select_training",
    "Decision",
    "ClassificationReport",
    "extropy_weights",
    "fuse",
    "classify_sample",
    "classify_sample_detailed",
    "evaluate",
]
