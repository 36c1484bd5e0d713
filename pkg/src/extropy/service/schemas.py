"""Request/response models for the HTTP service (and the CLI client)."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

MeasureName = Literal[
    "shannon-entropy", "extropy", "tsallis-entropy", "tsallis-extropy", "sum-identity-gap"
]

# computed when no --measure is given; the identity gap is a diagnostic
DEFAULT_MEASURES: tuple[MeasureName, ...] = (
    "shannon-entropy",
    "extropy",
    "tsallis-entropy",
    "tsallis-extropy",
)

ALL_MEASURES: tuple[MeasureName, ...] = DEFAULT_MEASURES + ("sum-identity-gap",)

# built-in order grid for evaluation-style commands
DEFAULT_ALPHA_GRID = (0.5, 0.7, 1.0, 1.5, 2.0)


class MeasureRequest(BaseModel):
    p: list[float] = Field(min_length=1, description="probabilities, must sum to 1")
    alphas: list[float] = Field(default_factory=lambda: list(DEFAULT_ALPHA_GRID))
    measures: list[MeasureName] = Field(default_factory=lambda: list(DEFAULT_MEASURES))


class MeasureRecord(BaseModel):
    measure: MeasureName
    alpha: Optional[float] = None  # None for the order-free Shannon-family measures
    value: float


class MeasureResponse(BaseModel):
    records: list[MeasureRecord]


class PolicySpec(BaseModel):
    strategy: Literal["first", "random"] = "first"
    per_class: int = Field(default=40, ge=1)
    seed: int = 0


class ClassifyRequest(BaseModel):
    sample: Optional[list[float]] = None  # feature values in SL,SW,PL,PW order
    sample_id: Optional[int] = None  # 0-based row in the dataset; exclusive with sample
    dataset: Optional[str] = None  # path on the service host; None = bundled data
    gamma: float = 5.0
    alphas: list[float] = Field(default_factory=lambda: [0.5], min_length=1)
    policy: PolicySpec = Field(default_factory=PolicySpec)


class ClassifyRecord(BaseModel):
    alpha: float
    distributions: dict[str, list[float]]  # feature -> per-class probabilities
    extropies: dict[str, float]
    weights: dict[str, float]
    fused: list[float]
    predicted: str
    tie: bool


class ClassifyResponse(BaseModel):
    classes: list[str]
    features: list[str]
    sample: list[float]
    sample_id: Optional[int] = None
    true_label: Optional[str] = None
    gamma: float
    records: list[ClassifyRecord]


class EvaluateRequest(BaseModel):
    dataset: Optional[str] = None
    gamma: float = 5.0
    alphas: list[float] = Field(default_factory=lambda: list(DEFAULT_ALPHA_GRID), min_length=1)
    policy: PolicySpec = Field(default_factory=PolicySpec)


class SampleOutcomeModel(BaseModel):
    id: int
    true_label: str
    predicted: str
    tie: bool


class ReportModel(BaseModel):
    alpha: float
    overall_rate: float
    n_correct: int
    n_total: int
    per_class_rate: dict[str, float]
    ties: int
    per_sample: list[SampleOutcomeModel]


class BaselineModel(BaseModel):
    method: str
    per_class_rate: dict[str, float]
    overall_rate: float
    source: Literal["literature", "this run"]


class EvaluateResponse(BaseModel):
    gamma: float
    policy: PolicySpec
    reports: list[ReportModel]
    comparison: list[BaselineModel]


class VerifyRequest(BaseModel):
    n_min: int = Field(default=3, ge=3)
    n_max: int = Field(default=10_000, ge=3)
    alphas: list[float] = Field(default_factory=list)  # empty = default sweep grid
    points_per_n: int = Field(default=10_000, ge=1)
    seed: int = 0
    include_curve: bool = True


class PropertyModel(BaseModel):
    name: str
    passed: bool
    checks: int
    worst_slack: float
    counterexample: Optional[dict] = None


class CurveModel(BaseModel):
    n: list[int]
    lower: list[float]
    middle: list[float]
    upper: list[float]


class VerifyResponse(BaseModel):
    all_passed: bool
    properties: list[PropertyModel]
    curve: Optional[CurveModel] = None


class ErrorDetail(BaseModel):
    kind: Literal["validation", "io"]
    message: str


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str
