import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import reference_values as ref
from extropy.errors import ValidationError
from extropy.intervals import (
    Interval,
    IntervalModel,
    build_interval_model,
    feature_distribution,
    interval_distance,
    interval_similarity,
)
from extropy.measures import ProbabilityVector


class TestInterval:
    def test_degenerate_allowed(self):
        iv = Interval(2.5, 2.5)
        assert iv.midpoint == 2.5
        assert iv.half_width == 0.0

    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValidationError, match="range"):
            Interval(2.0, 1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(ValidationError, match="range"):
            Interval(0.0, math.inf)
        with pytest.raises(ValidationError, match="range"):
            Interval(math.nan, 1.0)


class TestIntervalDistance:
    def test_identical_singletons(self):
        assert interval_distance(Interval(1, 1), Interval(1, 1)) == 0.0

    def test_width_only_term(self):
        # midpoints coincide, so only the width term survives
        assert interval_distance(Interval(0, 2), Interval(1, 1)) == pytest.approx(
            math.sqrt(1 / 3), abs=1e-15
        )

    def test_oracle_value(self):
        d = interval_distance(Interval(4.4, 5.8), Interval(6.1, 6.1))
        assert d == pytest.approx(ref.ORACLE_INTERVAL_DISTANCE, abs=1e-14)

    def test_symmetric_and_nonnegative(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            a1, a2, b1, b2 = np.sort(rng.uniform(0, 10, 4))
            a, b = Interval(a1, a2), Interval(b1, b2)
            assert interval_distance(a, b) == interval_distance(b, a)
            assert interval_distance(a, b) >= 0.0

    def test_self_distance_positive_for_wide_intervals(self):
        # not a metric: D(A, A) > 0 whenever A has positive width
        a = Interval(0.0, 2.0)
        assert interval_distance(a, a) == pytest.approx(math.sqrt(2 / 3), abs=1e-15)
        assert interval_distance(a, a) > 0.0
        assert interval_distance(Interval(3, 3), Interval(3, 3)) == 0.0


class TestIntervalSimilarity:
    def test_coincident_singletons_give_one(self):
        for gamma in (0.1, 1.0, 5.0, 50.0):
            assert interval_similarity(Interval(2, 2), Interval(2, 2), gamma) == 1.0

    def test_oracle_value(self):
        s = interval_similarity(Interval(0, 2), Interval(1, 1), 5.0)
        assert s == pytest.approx(ref.ORACLE_INTERVAL_SIMILARITY, abs=1e-14)

    def test_decreasing_in_gamma(self):
        a, b = Interval(0, 2), Interval(1, 1)
        values = [interval_similarity(a, b, g) for g in (0.5, 1.0, 2.0, 5.0, 20.0)]
        assert all(later < earlier for earlier, later in zip(values, values[1:]))

    def test_in_unit_interval(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            a1, a2 = np.sort(rng.uniform(0, 10, 2))
            b1, b2 = np.sort(rng.uniform(0, 10, 2))
            s = interval_similarity(Interval(a1, a2), Interval(b1, b2), 5.0)
            assert 0.0 < s <= 1.0

    def test_gamma_validation(self):
        with pytest.raises(ValidationError, match="range"):
            interval_similarity(Interval(0, 1), Interval(0, 1), 0.0)
        with pytest.raises(ValidationError, match="range"):
            interval_similarity(Interval(0, 1), Interval(0, 1), -2.0)


class TestIntervalModel:
    def test_lookup(self, reference_model):
        assert reference_model.interval("Se", "SL") == Interval(4.4, 5.8)
        assert reference_model.interval("Vi", "PW") == Interval(1.4, 2.5)

    def test_unknown_labels(self, reference_model):
        with pytest.raises(ValidationError, match="labels"):
            reference_model.interval("Setosa", "SL")
        with pytest.raises(ValidationError, match="labels"):
            reference_model.interval("Se", "XX")

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValidationError, match="labels"):
            IntervalModel(("a", "a"), ("f",), [[(0, 1)], [(0, 1)]])

    def test_incomplete_grid_rejected(self):
        with pytest.raises(ValidationError, match="grid"):
            IntervalModel(("a", "b"), ("f", "g"), {"a": {"f": (0, 1), "g": (0, 1)}, "b": {"f": (0, 1)}})


class TestFeatureDistribution:
    def test_reference_columns_for_actual_walkthrough_sample(self, reference_model):
        for feature, value in zip(ref.FEATURES, ref.WORKED_SAMPLE_ACTUAL):
            dist = feature_distribution(reference_model, feature, value, 5.0)
            assert_allclose(dist.probs, ref.REFERENCE_DISTRIBUTIONS[feature], atol=ref.TABLE_TOLERANCE)

    def test_output_is_validated_distribution(self, reference_model):
        dist = feature_distribution(reference_model, "SW", 3.0, 5.0)
        assert isinstance(dist, ProbabilityVector)
        assert dist.n == 3
        assert math.isclose(float(dist.probs.sum()), 1.0, abs_tol=1e-12)

    def test_single_class_model(self):
        model = IntervalModel(("only",), ("f",), [[(0.0, 4.0)]])
        dist = feature_distribution(model, "f", 17.0, 5.0)
        assert dist.probs.tolist() == [1.0]

    def test_closer_class_gets_more_mass(self):
        model = IntervalModel(("near", "far"), ("f",), [[(1.0, 1.2)], [(8.0, 8.2)]])
        dist = feature_distribution(model, "f", 1.1, 5.0)
        assert dist.probs[0] > dist.probs[1]

    def test_non_finite_sample_rejected(self, reference_model):
        with pytest.raises(ValidationError, match="range"):
            feature_distribution(reference_model, "SL", math.nan, 5.0)


class TestBuildIntervalModel:
    def test_single_sample_classes_are_degenerate(self):
        model = build_interval_model(
            [((1.0, 2.0), "a"), ((3.0, 4.0), "b")], ("a", "b"), ("f", "g")
        )
        assert model.interval("a", "f") == Interval(1.0, 1.0)
        assert model.interval("b", "g") == Interval(4.0, 4.0)

    def test_min_max_cell(self):
        model = build_interval_model(
            [((1.0,), "c"), ((3.0,), "c"), ((2.0,), "c")], ("c",), ("f",)
        )
        assert model.interval("c", "f") == Interval(1.0, 3.0)

    def test_order_independent_within_class(self):
        rows = [((float(v),), "c") for v in (5, 1, 4, 2, 3)]
        a = build_interval_model(rows, ("c",), ("f",))
        b = build_interval_model(list(reversed(rows)), ("c",), ("f",))
        assert a == b

    def test_missing_class_named_in_error(self):
        with pytest.raises(ValidationError, match="'b'"):
            build_interval_model([((1.0,), "a")], ("a", "b"), ("f",))

    def test_unknown_label_rejected(self):
        with pytest.raises(ValidationError, match="labels"):
            build_interval_model([((1.0,), "zzz")], ("a",), ("f",))

    def test_wrong_width_rejected(self):
        with pytest.raises(ValidationError, match="shape"):
            build_interval_model([((1.0, 2.0), "a")], ("a",), ("f",))

    def test_reproduces_reference_model_from_bundled_data(self, iris_samples, reference_model):
        from extropy.dataset import CLASSES, FEATURES, SelectionPolicy, select_training

        chosen = select_training(
            iris_samples,
            SelectionPolicy(per_class_count=40, strategy="random", seed=ref.WITNESS_SEED),
        )
        model = build_interval_model(((s.features, s.label) for s in chosen), CLASSES, FEATURES)
        assert model == reference_model
