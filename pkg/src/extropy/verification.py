"""Randomized numerical verification of the measure-level theorems.

Each property the measures module is supposed to satisfy (bounds, sign
ordering, identities, closed-form agreement, threshold ranges) is swept
over seeded random simplex points and ranges of support sizes. A sweep
reports, per property, the number of comparisons made and the worst slack
observed; any negative slack is a violation and comes with a
counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import measures
from .errors import ValidationError

__all__ = [
    "DEFAULT_SWEEP_ALPHAS",
    "PropertyCheck",
    "BoundsCurve",
    "sample_simplex",
    "run_property_sweep",
    "bounds_curve",
]

# Orders used by the default sweep: both sides of 1, the self-dual point 2,
# and tails on both ends.
DEFAULT_SWEEP_ALPHAS = (0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0, 10.0)

NONNEGATIVITY_TOL = 1e-12
COINCIDENCE_TOL = 1e-12
SUM_IDENTITY_TOL = 1e-10
ORDERING_TOL = 1e-12
MAXIMALITY_TOL = 1e-12
CLOSED_FORM_TOL = 1e-12
LIMIT_CONTINUITY_TOL = 1e-4
LIMIT_ALPHA_OFFSET = 1e-6
UNIFORM_LIMIT_FLOOR = 0.999


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one swept property.

    ``worst_slack`` is the smallest distance to the allowed boundary seen
    across all comparisons; negative means violated. ``strict`` properties
    also fail at exactly zero slack.
    """

    name: str
    passed: bool
    checks: int
    worst_slack: float
    counterexample: dict | None


class _Tracker:
    """Accumulates slack values for one property across sweep blocks."""

    def __init__(self, name: str, strict: bool = False):
        self.name = name
        self.strict = strict
        self.checks = 0
        self.worst = math.inf
        self.example: dict | None = None

    def update(self, slack: np.ndarray, context: Callable[[int], dict]) -> None:
        slack = np.ravel(np.asarray(slack, dtype=np.float64))
        if slack.size == 0:
            return
        self.checks += slack.size
        i = int(np.argmin(slack))
        m = float(slack[i])
        if m < self.worst:
            self.worst = m
            failed = m < 0.0 or (self.strict and m <= 0.0)
            self.example = context(i) if failed else None

    def result(self) -> PropertyCheck:
        if self.checks == 0:
            return PropertyCheck(self.name, False, 0, math.nan, {"reason": "no checks ran"})
        passed = self.worst > 0.0 if self.strict else self.worst >= 0.0
        return PropertyCheck(self.name, passed, self.checks, self.worst, None if passed else self.example)


def sample_simplex(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` points drawn uniformly from the (n-1)-simplex, as rows."""
    if n < 1 or count < 1:
        raise ValidationError(f"range: need n >= 1 and count >= 1, got n={n}, count={count}")
    return rng.dirichlet(np.ones(n), size=count)


def _point_context(n: int, alpha: float, points: np.ndarray):
    def build(i: int) -> dict:
        return {"n": n, "alpha": alpha, "p": [float(v) for v in points[i]]}

    return build


def run_property_sweep(
    *,
    points_per_n: int = 10_000,
    n_values: Sequence[int] = tuple(range(2, 13)),
    alphas: Sequence[float] = DEFAULT_SWEEP_ALPHAS,
    seed: int = 0,
    limit_points: int = 1_000,
    uniform_n_max: int = 10_000,
    uniform_limit_n: int = 1_000_000,
    closed_form_n_max: int = 1_000,
    threshold_n_max: int = 10_000,
    tsallis_extropy_impl: Callable[[np.ndarray, float], np.ndarray] | None = None,
    tsallis_entropy_impl: Callable[[np.ndarray, float], np.ndarray] | None = None,
) -> list[PropertyCheck]:
    """Run every property sweep and return one :class:`PropertyCheck` each.

    The ``*_impl`` hooks substitute the measure kernels under test; they
    exist so a deliberately corrupted measure can be shown to fail (the
    default is always the production implementation, resolved at call
    time).
    """
    for a in alphas:
        measures._check_alpha(a)
    js = tsallis_extropy_impl or measures.tsallis_extropy_batch
    s = tsallis_entropy_impl or measures.tsallis_entropy_batch
    rng = np.random.default_rng(seed)

    nonneg = _Tracker("non-negativity")
    upper = _Tracker("upper-bound", strict=True)
    binary_eq = _Tracker("binary-equality")
    coincide = _Tracker("alpha-2-coincidence")
    identity = _Tracker("sum-identity")
    ordering = _Tracker("ordering-sign")
    maximal = _Tracker("maximality")
    monotone = _Tracker("uniform-monotonicity", strict=True)
    saturates = _Tracker("uniform-limit")
    continuity_js = _Tracker("limit-continuity-extropy")
    continuity_s = _Tracker("limit-continuity-entropy")
    closed_form = _Tracker("closed-form-agreement")
    threshold = _Tracker("threshold-range", strict=True)
    sandwich = _Tracker("bounds-ordering", strict=True)

    for n in n_values:
        points = sample_simplex(int(n), points_per_n, rng)
        for alpha in alphas:
            ctx = _point_context(int(n), float(alpha), points)
            js_vals = js(points, alpha)
            s_vals = s(points, alpha)
            nonneg.update(js_vals + NONNEGATIVITY_TOL, ctx)
            upper.update(1.0 - js_vals, ctx)
            identity.update(
                SUM_IDENTITY_TOL
                - np.abs(s_vals + js_vals - measures.binary_tsallis_batch(points, alpha).sum(axis=-1)),
                ctx,
            )
            bound = measures.uniform_tsallis_extropy(int(n), alpha)
            maximal.update(bound + MAXIMALITY_TOL - js_vals, ctx)
            if n == 2:
                binary_eq.update(COINCIDENCE_TOL - np.abs(js_vals - s_vals), ctx)
            if alpha == 2.0:
                coincide.update(COINCIDENCE_TOL - np.abs(s_vals - js_vals), ctx)
            elif n >= 3:
                diff = s_vals - js_vals
                if alpha < 2.0:
                    ordering.update(diff + ORDERING_TOL, ctx)
                else:
                    ordering.update(ORDERING_TOL - diff, ctx)

    # alpha -> 1 continuity, checked just outside the limit-dispatch window
    per_n = max(1, limit_points // len(tuple(n_values)))
    for n in n_values:
        points = sample_simplex(int(n), per_n, rng)
        j_exact = measures.extropy_batch(points)
        h_exact = measures.shannon_entropy_batch(points)
        for alpha in (1.0 - LIMIT_ALPHA_OFFSET, 1.0 + LIMIT_ALPHA_OFFSET):
            ctx = _point_context(int(n), float(alpha), points)
            continuity_js.update(LIMIT_CONTINUITY_TOL - np.abs(js(points, alpha) - j_exact), ctx)
            continuity_s.update(LIMIT_CONTINUITY_TOL - np.abs(s(points, alpha) - h_exact), ctx)

    supports = np.arange(1, uniform_n_max + 1, dtype=np.float64)
    uniform_vectors = [
        measures.ProbabilityVector.uniform(n) for n in range(1, closed_form_n_max + 1)
    ]
    for alpha in alphas:
        vals = measures.uniform_tsallis_extropy_batch(supports, alpha)
        monotone.update(
            np.diff(vals),
            lambda i, a=alpha: {"n": int(supports[i + 1]), "alpha": a},
        )
        saturates.update(
            np.array([measures.uniform_tsallis_extropy(uniform_limit_n, alpha) - UNIFORM_LIMIT_FLOOR]),
            lambda i, a=alpha: {"n": uniform_limit_n, "alpha": a},
        )
        for pv in uniform_vectors:
            # the scalar API carries the fsum precision this 1e-12 check needs;
            # an injected implementation is swept through the batch route
            if tsallis_extropy_impl is not None:
                direct = float(js(pv.probs[None, :], alpha)[0])
            else:
                direct = measures.tsallis_extropy(pv, alpha)
            closed = measures.uniform_tsallis_extropy(pv.n, alpha)
            closed_form.update(
                np.array([CLOSED_FORM_TOL - abs(closed - direct)]),
                lambda i, n=pv.n, a=alpha, c=closed, d=direct: {"n": n, "alpha": a, "closed": c, "direct": d},
            )

    ns = np.arange(3, threshold_n_max + 1, dtype=np.float64)
    g = _threshold_array(ns)
    low, mid, up = _bounds_arrays(ns)
    g_ctx = lambda i: {"n": int(ns[i]), "g": float(g[i])}  # noqa: E731
    threshold.update(np.minimum(g - 1.0, 2.0 - g), g_ctx)
    tri_ctx = lambda i: {  # noqa: E731
        "n": int(ns[i % ns.size]),
        "triple": [float(low[i % ns.size]), float(mid[i % ns.size]), float(up[i % ns.size])],
    }
    sandwich.update(np.concatenate([mid - low, up - mid]), tri_ctx)

    return [
        t.result()
        for t in (
            nonneg,
            upper,
            binary_eq,
            coincide,
            identity,
            ordering,
            maximal,
            monotone,
            saturates,
            continuity_js,
            continuity_s,
            closed_form,
            threshold,
            sandwich,
        )
    ]


def _threshold_array(n: np.ndarray) -> np.ndarray:
    ln = np.log(n)
    return (np.log1p(2.0 / (n - 2)) + np.log1p(np.log1p(-1.0 / n) / ln)) / np.log1p(1.0 / (n - 1))


def _bounds_arrays(n: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lower = (n - 2.0) / (n - 1.0)
    middle = 1.0 + np.log1p(-1.0 / n) / np.log(n)
    upper = n * (n - 2.0) / ((n - 1.0) * (n - 1.0))
    return lower, middle, upper


@dataclass(frozen=True)
class BoundsCurve:
    """The threshold sandwich evaluated on a range of support sizes."""

    n: np.ndarray
    lower: np.ndarray
    middle: np.ndarray
    upper: np.ndarray

    def rows(self) -> list[tuple[int, float, float, float]]:
        return [
            (int(n), float(lo), float(mi), float(up))
            for n, lo, mi, up in zip(self.n, self.lower, self.middle, self.upper)
        ]


def bounds_curve(n_min: int = 3, n_max: int = 100) -> BoundsCurve:
    """Sandwich-bound values for every support size in [n_min, n_max]."""
    if n_min < 3:
        raise ValidationError(f"range: curve needs n_min >= 3, got {n_min}")
    if n_max < n_min:
        raise ValidationError(f"range: n_max {n_max} smaller than n_min {n_min}")
    ns = np.arange(n_min, n_max + 1, dtype=np.float64)
    lower, middle, upper = _bounds_arrays(ns)
    return BoundsCurve(n=ns.astype(np.int64), lower=lower, middle=middle, upper=upper)
