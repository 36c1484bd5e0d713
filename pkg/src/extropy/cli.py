"""Command-line client for the extropy service.

Each subcommand builds the same pydantic request the HTTP endpoint accepts.
Without ``--url`` the request is handled in-process; with it, the request
is POSTed to a running service. Output is aligned text (4 decimals) or
newline-delimited JSON (full precision).

Exit codes: 0 success, 1 validation error, 2 property violation, 3 I/O
error.
"""

from __future__ import annotations

import json
import sys
from typing import Sequence

import click
import httpx
import pydantic

from .errors import ValidationError
from .service import handlers
from .service.schemas import (
    ALL_MEASURES,
    DEFAULT_ALPHA_GRID,
    DEFAULT_MEASURES,
    ClassifyRequest,
    ClassifyResponse,
    EvaluateRequest,
    EvaluateResponse,
    MeasureRequest,
    MeasureResponse,
    PolicySpec,
    VerifyRequest,
    VerifyResponse,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PROPERTY = 2
EXIT_IO = 3


class PropertyViolation(Exception):
    """At least one verified property failed (output already rendered)."""


class ServiceClient:
    """Dispatches requests either in-process or to a remote service."""

    def __init__(self, url: str | None):
        self.url = url.rstrip("/") if url else None

    def measures(self, request: MeasureRequest) -> MeasureResponse:
        if self.url is None:
            return handlers.compute_measures(request)
        return MeasureResponse.model_validate(self._post("/measures", request))

    def classify(self, request: ClassifyRequest) -> ClassifyResponse:
        if self.url is None:
            return handlers.classify(request)
        return ClassifyResponse.model_validate(self._post("/classify", request))

    def evaluate(self, request: EvaluateRequest) -> EvaluateResponse:
        if self.url is None:
            return handlers.run_evaluation(request)
        return EvaluateResponse.model_validate(self._post("/evaluate", request))

    def verify(self, request: VerifyRequest) -> VerifyResponse:
        if self.url is None:
            return handlers.verify(request)
        return VerifyResponse.model_validate(self._post("/verify", request))

    def _post(self, path: str, request) -> dict:
        try:
            response = httpx.post(self.url + path, json=request.model_dump(), timeout=300.0)
        except httpx.HTTPError as exc:
            raise OSError(f"cannot reach service at {self.url}: {exc}") from exc
        if response.status_code == 200:
            return response.json()
        try:
            detail = response.json().get("detail")
        except ValueError:
            detail = None
        if isinstance(detail, dict) and detail.get("kind") == "io":
            raise OSError(detail.get("message", "I/O error on the service host"))
        message = detail.get("message") if isinstance(detail, dict) else str(detail)
        raise ValidationError(f"service rejected the request ({response.status_code}): {message}")


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValidationError(f"range: {what} must be comma-separated numbers, got {text!r}") from None


def _alpha_list(text: str | None) -> list[float]:
    if text is None:
        return list(DEFAULT_ALPHA_GRID)
    values = _parse_floats(text, "--alpha")
    if not values:
        raise ValidationError("range: --alpha needs at least one value")
    return values


def _emit_json(record: dict) -> None:
    click.echo(json.dumps(record))


def _fmt(value: float) -> str:
    return f"{value:.4f}"


fmt_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True,
    help="newline-delimited JSON (full precision) or aligned text (4 decimals)",
)
url_option = click.option(
    "--url", envvar="EXTROPY_URL", default=None,
    help="base URL of a running service; default is in-process execution",
)
gamma_option = click.option(
    "--gamma", envvar="EXTROPY_GAMMA", type=float, default=5.0, show_default=True,
    help="support coefficient of the interval similarity",
)
alpha_option = click.option(
    "--alpha", "alpha_text", envvar="EXTROPY_ALPHA", default=None,
    help=f"comma-separated orders [default: {','.join(str(a) for a in DEFAULT_ALPHA_GRID)}]",
)
dataset_option = click.option(
    "--dataset", default=None,
    help="path to a SL,SW,PL,PW,class CSV; default is the bundled canonical data",
)
policy_options = (
    click.option("--per-class", type=int, default=40, show_default=True,
                 help="training samples drawn from each class"),
    click.option("--policy", type=click.Choice(["first", "random"]), default="first",
                 show_default=True, help="training selection strategy"),
    click.option("--seed", type=int, default=0, show_default=True,
                 help="seed for the random selection strategy"),
)


def _with_policy(f):
    for opt in reversed(policy_options):
        f = opt(f)
    return f


@click.group()
def cli() -> None:
    """Tsallis extropy measures and interval-evidence classification."""


@cli.command()
@click.option("--p", "p_text", required=True, help="comma-separated probabilities, e.g. 0.3,0.5,0.2")
@alpha_option
@click.option(
    "--measure", "measure_names", multiple=True,
    help=f"measure to compute (repeatable); choices: {', '.join(ALL_MEASURES)} "
    f"[default: {', '.join(DEFAULT_MEASURES)}]",
)
@fmt_option
@url_option
def measure(p_text: str, alpha_text: str | None, measure_names: tuple[str, ...], fmt: str, url: str | None) -> None:
    """Evaluate information measures of one distribution."""
    names = list(measure_names) if measure_names else list(DEFAULT_MEASURES)
    for name in names:
        if name not in ALL_MEASURES:
            raise ValidationError(f"labels: unknown measure {name!r}; choices are {ALL_MEASURES}")
    request = MeasureRequest(p=_parse_floats(p_text, "--p"), alphas=_alpha_list(alpha_text), measures=names)
    response = ServiceClient(url).measures(request)
    if fmt == "json":
        for record in response.records:
            _emit_json(record.model_dump())
        return
    click.echo(f"{'measure':<16} {'alpha':>6}  value")
    for record in response.records:
        alpha = f"{record.alpha:g}" if record.alpha is not None else "-"
        click.echo(f"{record.measure:<16} {alpha:>6}  {_fmt(record.value)}")


@cli.command()
@dataset_option
@click.option(
    "--sample", "sample_text", required=True,
    help="either four comma-separated feature values (SL,SW,PL,PW) or a 0-based dataset row id",
)
@gamma_option
@alpha_option
@_with_policy
@fmt_option
@url_option
def classify(
    dataset: str | None,
    sample_text: str,
    gamma: float,
    alpha_text: str | None,
    per_class: int,
    policy: str,
    seed: int,
    fmt: str,
    url: str | None,
) -> None:
    """Classify one sample: distributions, extropies, weights, fused verdict."""
    sample = sample_id = None
    if "," in sample_text or "." in sample_text:
        sample = _parse_floats(sample_text, "--sample")
    else:
        try:
            sample_id = int(sample_text)
        except ValueError:
            raise ValidationError(
                f"range: --sample must be feature values or an integer row id, got {sample_text!r}"
            ) from None
    request = ClassifyRequest(
        sample=sample,
        sample_id=sample_id,
        dataset=dataset,
        gamma=gamma,
        alphas=_alpha_list(alpha_text),
        policy=PolicySpec(strategy=policy, per_class=per_class, seed=seed),
    )
    response = ServiceClient(url).classify(request)
    if fmt == "json":
        base = {
            "record": "classification",
            "classes": response.classes,
            "features": response.features,
            "sample": response.sample,
            "sample_id": response.sample_id,
            "true_label": response.true_label,
            "gamma": response.gamma,
        }
        for record in response.records:
            _emit_json({**base, **record.model_dump()})
        return
    sample_str = ", ".join(f"{v:g}" for v in response.sample)
    suffix = f" (row {response.sample_id}, true class {response.true_label})" if response.sample_id is not None else ""
    click.echo(f"sample ({sample_str}){suffix}  gamma={response.gamma:g}")
    for record in response.records:
        click.echo(f"\nalpha = {record.alpha:g}")
        header = "  ".join(f"{f:>8}" for f in response.features)
        click.echo(f"  {'':<8}  {header}")
        for i, cls in enumerate(response.classes):
            row = "  ".join(_fmt(record.distributions[f][i]).rjust(8) for f in response.features)
            click.echo(f"  {f'P({cls})':<8}  {row}")
        click.echo(f"  {'extropy':<8}  " + "  ".join(_fmt(record.extropies[f]).rjust(8) for f in response.features))
        click.echo(f"  {'weight':<8}  " + "  ".join(_fmt(record.weights[f]).rjust(8) for f in response.features))
        fused = ", ".join(f"P({c})={_fmt(v)}" for c, v in zip(response.classes, record.fused))
        tie_note = "  [tie]" if record.tie else ""
        click.echo(f"  fused: {fused}")
        click.echo(f"  decision: {record.predicted}{tie_note}")


@cli.command()
@dataset_option
@gamma_option
@alpha_option
@_with_policy
@fmt_option
@url_option
def evaluate(
    dataset: str | None,
    gamma: float,
    alpha_text: str | None,
    per_class: int,
    policy: str,
    seed: int,
    fmt: str,
    url: str | None,
) -> None:
    """Classify every dataset row and report recognition rates per order."""
    request = EvaluateRequest(
        dataset=dataset,
        gamma=gamma,
        alphas=_alpha_list(alpha_text),
        policy=PolicySpec(strategy=policy, per_class=per_class, seed=seed),
    )
    response = ServiceClient(url).evaluate(request)
    if fmt == "json":
        for report in response.reports:
            _emit_json({"record": "report", **report.model_dump()})
        _emit_json({
            "record": "comparison",
            "methods": [b.model_dump() for b in response.comparison],
        })
        return
    click.echo(f"policy={response.policy.strategy} per-class={response.policy.per_class} "
               f"seed={response.policy.seed} gamma={response.gamma:g}")
    classes = list(response.reports[0].per_class_rate) if response.reports else []
    header = "  ".join(f"{c:>6}" for c in classes)
    click.echo(f"{'alpha':>6}  {header}  {'overall':>8}  {'correct':>9}  ties")
    for report in response.reports:
        rates = "  ".join(f"{report.per_class_rate[c] * 100:5.1f}%" for c in classes)
        click.echo(
            f"{report.alpha:>6g}  {rates}  {report.overall_rate * 100:7.2f}%  "
            f"{report.n_correct:>4}/{report.n_total:<4}  {report.ties}"
        )
    click.echo("\ncomparison:")
    for entry in response.comparison:
        click.echo(f"  {entry.overall_rate * 100:6.2f}%  {entry.method} [{entry.source}]")


@cli.command()
@click.option("--n-min", type=int, default=3, show_default=True, help="smallest support size for the bound curve")
@click.option("--n-max", type=int, default=10_000, show_default=True, help="largest support size swept")
@alpha_option
@click.option("--seed", type=int, default=0, show_default=True, help="seed for the simplex sampling")
@click.option("--no-curve", is_flag=True, default=False, help="skip emitting the bound-curve rows")
@fmt_option
@url_option
def verify(
    n_min: int,
    n_max: int,
    alpha_text: str | None,
    seed: int,
    no_curve: bool,
    fmt: str,
    url: str | None,
) -> None:
    """Sweep the measure-level theorems; nonzero exit on any violation."""
    request = VerifyRequest(
        n_min=n_min,
        n_max=n_max,
        alphas=_parse_floats(alpha_text, "--alpha") if alpha_text is not None else [],
        seed=seed,
        include_curve=not no_curve,
    )
    response = ServiceClient(url).verify(request)
    if fmt == "json":
        for prop in response.properties:
            _emit_json({"record": "property", **prop.model_dump()})
        if response.curve is not None:
            for n, lo, mi, up in zip(
                response.curve.n, response.curve.lower, response.curve.middle, response.curve.upper
            ):
                _emit_json({"record": "bounds-curve", "n": n, "lower": lo, "middle": mi, "upper": up})
    else:
        for prop in response.properties:
            status = "pass" if prop.passed else "FAIL"
            line = f"{status}  {prop.name:<26} checks={prop.checks:<9} worst-slack={prop.worst_slack:.3e}"
            click.echo(line)
            if prop.counterexample is not None:
                click.echo(f"      counterexample: {json.dumps(prop.counterexample)}")
        if response.curve is not None:
            click.echo(f"\n{'N':>7}  {'lower':>10}  {'middle':>10}  {'upper':>10}")
            for n, lo, mi, up in zip(
                response.curve.n, response.curve.lower, response.curve.middle, response.curve.upper
            ):
                click.echo(f"{n:>7}  {lo:>10.6f}  {mi:>10.6f}  {up:>10.6f}")
    if not response.all_passed:
        raise PropertyViolation()


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except PropertyViolation:
        click.echo("property violation detected", err=True)
        return EXIT_PROPERTY
    except ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        return EXIT_VALIDATION
    except pydantic.ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        return EXIT_VALIDATION
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        return EXIT_IO
    except click.ClickException as exc:
        exc.show()
        return EXIT_VALIDATION
    except click.Abort:
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
