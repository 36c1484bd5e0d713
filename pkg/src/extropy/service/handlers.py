"""Service operations: plain functions from request models to response models.

The FastAPI routes in :mod:`extropy.service.app` are thin wrappers around
these; the CLI calls them directly when no remote URL is configured, so the
in-process and over-the-wire behaviors are the same by construction.
Domain problems surface as :class:`extropy.errors.ValidationError`, file
problems as ``OSError``; the transport layer maps both.
"""

from __future__ import annotations

from pathlib import Path

from .. import measures, verification
from ..classifier import (
    LITERATURE_BASELINES,
    classify_sample_detailed,
    evaluate,
)
from ..dataset import (
    CLASSES,
    FEATURES,
    LabeledSample,
    SelectionPolicy,
    bundled_iris_path,
    load_iris,
    select_training,
)
from ..errors import ValidationError
from ..intervals import IntervalModel, build_interval_model
from ..verification import DEFAULT_SWEEP_ALPHAS
from .schemas import (
    BaselineModel,
    ClassifyRecord,
    ClassifyRequest,
    ClassifyResponse,
    CurveModel,
    EvaluateRequest,
    EvaluateResponse,
    MeasureRecord,
    MeasureRequest,
    MeasureResponse,
    PolicySpec,
    PropertyModel,
    ReportModel,
    SampleOutcomeModel,
    VerifyRequest,
    VerifyResponse,
)

def compute_measures(request: MeasureRequest) -> MeasureResponse:
    """One record per requested measure, and per order for the Tsallis family."""
    p = measures.ProbabilityVector(request.p)
    records: list[MeasureRecord] = []
    per_order = {
        "tsallis-entropy": measures.tsallis_entropy,
        "tsallis-extropy": measures.tsallis_extropy,
        "sum-identity-gap": measures.sum_identity_gap,
    }
    for name in request.measures:
        if name == "shannon-entropy":
            records.append(MeasureRecord(measure=name, value=measures.shannon_entropy(p)))
        elif name == "extropy":
            records.append(MeasureRecord(measure=name, value=measures.extropy(p)))
        else:
            fn = per_order[name]
            for alpha in request.alphas:
                records.append(MeasureRecord(measure=name, alpha=alpha, value=fn(p, alpha)))
    return MeasureResponse(records=records)


def _load_samples(dataset: str | None) -> list[LabeledSample]:
    path = Path(dataset) if dataset else bundled_iris_path()
    return load_iris(path)


def _build_model(samples: list[LabeledSample], policy: PolicySpec) -> IntervalModel:
    selection = select_training(
        samples,
        SelectionPolicy(per_class_count=policy.per_class, strategy=policy.strategy, seed=policy.seed),
    )
    return build_interval_model(
        ((s.features, s.label) for s in selection), classes=CLASSES, features=FEATURES
    )


def classify(request: ClassifyRequest) -> ClassifyResponse:
    """Classify one sample against an interval model built from the dataset."""
    if (request.sample is None) == (request.sample_id is None):
        raise ValidationError("shape: provide exactly one of 'sample' or 'sample_id'")
    samples = _load_samples(request.dataset)
    model = _build_model(samples, request.policy)
    true_label = None
    if request.sample_id is not None:
        if not 0 <= request.sample_id < len(samples):
            raise ValidationError(
                f"range: sample_id {request.sample_id} outside the dataset (0..{len(samples) - 1})"
            )
        picked = samples[request.sample_id]
        values = list(picked.features)
        true_label = picked.label
    else:
        values = [float(v) for v in request.sample]
    records = []
    for alpha in request.alphas:
        breakdown = classify_sample_detailed(model, values, request.gamma, alpha)
        records.append(
            ClassifyRecord(
                alpha=alpha,
                distributions={f: d.probs.tolist() for f, d in breakdown.distributions.items()},
                extropies=breakdown.extropies,
                weights=breakdown.weights,
                fused=breakdown.decision.fused.probs.tolist(),
                predicted=breakdown.decision.predicted,
                tie=breakdown.decision.tie,
            )
        )
    return ClassifyResponse(
        classes=list(model.classes),
        features=list(model.features),
        sample=values,
        sample_id=request.sample_id,
        true_label=true_label,
        gamma=request.gamma,
        records=records,
    )


def run_evaluation(request: EvaluateRequest) -> EvaluateResponse:
    """Per-order recognition reports over every dataset row, plus baselines."""
    samples = _load_samples(request.dataset)
    model = _build_model(samples, request.policy)
    reports = []
    best_overall = None
    for alpha in request.alphas:
        report = evaluate(model, samples, request.gamma, alpha)
        reports.append(
            ReportModel(
                alpha=report.alpha,
                overall_rate=report.overall_rate,
                n_correct=report.n_correct,
                n_total=report.n_total,
                per_class_rate=report.per_class_rate,
                ties=report.ties,
                per_sample=[
                    SampleOutcomeModel(
                        id=o.sample_id, true_label=o.true_label, predicted=o.predicted, tie=o.tie
                    )
                    for o in report.per_sample
                ],
            )
        )
        if best_overall is None or report.overall_rate > best_overall.overall_rate:
            best_overall = report
    comparison = [
        BaselineModel(
            method=b.method,
            per_class_rate=dict(b.per_class_rate),
            overall_rate=b.overall_rate,
            source="literature",
        )
        for b in LITERATURE_BASELINES
    ]
    comparison.append(
        BaselineModel(
            method="interval similarity with Tsallis-extropy weighting "
            f"(best alpha={best_overall.alpha:g})",
            per_class_rate=best_overall.per_class_rate,
            overall_rate=best_overall.overall_rate,
            source="this run",
        )
    )
    return EvaluateResponse(
        gamma=request.gamma, policy=request.policy, reports=reports, comparison=comparison
    )


def verify(request: VerifyRequest) -> VerifyResponse:
    """Run the theorem sweeps; never raises on violations, reports them."""
    if request.n_max < request.n_min:
        raise ValidationError(f"range: n_max {request.n_max} smaller than n_min {request.n_min}")
    alphas = tuple(request.alphas) if request.alphas else DEFAULT_SWEEP_ALPHAS
    checks = verification.run_property_sweep(
        points_per_n=request.points_per_n,
        alphas=alphas,
        seed=request.seed,
        uniform_n_max=request.n_max,
        closed_form_n_max=min(request.n_max, 1_000),
        threshold_n_max=request.n_max,
    )
    curve = None
    if request.include_curve:
        data = verification.bounds_curve(request.n_min, request.n_max)
        curve = CurveModel(
            n=data.n.tolist(),
            lower=data.lower.tolist(),
            middle=data.middle.tolist(),
            upper=data.upper.tolist(),
        )
    properties = [
        PropertyModel(
            name=c.name,
            passed=c.passed,
            checks=c.checks,
            worst_slack=c.worst_slack,
            counterexample=c.counterexample,
        )
        for c in checks
    ]
    return VerifyResponse(
        all_passed=all(p.passed for p in properties), properties=properties, curve=curve
    )
