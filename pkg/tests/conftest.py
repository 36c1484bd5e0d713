import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reference_values import CLASSES, FEATURES, REFERENCE_INTERVALS

from extropy.dataset import bundled_iris_path, load_iris
from extropy.intervals import IntervalModel


@pytest.fixture(scope="session")
def reference_model() -> IntervalModel:
    return IntervalModel(CLASSES, FEATURES, REFERENCE_INTERVALS)


@pytest.fixture(scope="session")
def iris_samples():
    return load_iris(bundled_iris_path())
