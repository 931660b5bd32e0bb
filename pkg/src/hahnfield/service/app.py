"""FastAPI service wrapping the core package.

Three POST endpoints mirror the CLI subcommands: /eval, /check, /embed.
Domain errors map to HTTP 400 with a structured ErrorInfo body; check
failures are data, not errors (HTTP 200 with passed=false).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..checker import SampleSet, run_standard_checks
from ..coefficients import CoefficientField
from ..embedding import Budget, embed
from ..errors import EvalError, HahnError, ParseError
from ..expr import SupportValue, ValuationValue, evaluate, finalize
from ..exponents import ExponentGroup, format_valuation
from ..grid import GridSeries
from ..series import FiniteSeries
from ..structure import GridHahnModel, HahnModel, build_model
from .schemas import (
    CheckItemPayload,
    CheckRequest,
    CheckResponse,
    EmbedRequest,
    EmbedResponse,
    ErrorInfo,
    EvalRequest,
    EvalResponse,
    SeriesPayload,
)

DEFAULT_DISPLAY_BOUND = "10"


def _error(kind: str, message: str, position: int | None = None) -> HTTPException:
    info = ErrorInfo(kind=kind, message=message, position=position)
    return HTTPException(status_code=400, detail=info.model_dump())


def _session(group: str, coeff: str):
    try:
        g = ExponentGroup.from_selector(group)
        f = CoefficientField.from_selector(coeff)
    except ValueError as exc:
        raise _error("usage_error", str(exc)) from exc
    return g, f


def _series_payload(series: FiniteSeries) -> SeriesPayload:
    data = series.to_json_dict()
    return SeriesPayload(group=data["group"], coeff=data["coeff"], terms=data["terms"])


def _embed_text(terms, exhausted: bool, residual: str | None) -> str:
    body = "[" + ",".join(f"({e},{c})" for e, c in terms) + "]"
    if exhausted:
        return body + " exhausted"
    if residual is None:
        return body + " not exhausted"
    return body + f" not exhausted (residual valuation {residual})"


def create_app() -> FastAPI:
    app = FastAPI(
        title="hahnfield",
        version=__version__,
        description="Exact Hahn-series arithmetic, axiom checking and series embedding",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse, response_model_exclude_none=True)
    def eval_endpoint(req: EvalRequest) -> EvalResponse:
        group, field = _session(req.group, req.coeff)
        try:
            value = evaluate(req.expr, group, field)
            display_bound = None
            if isinstance(value, GridSeries):
                display_bound = group.parse(req.bound or DEFAULT_DISPLAY_BOUND)
            outcome = finalize(value, display_bound)
        except ParseError as exc:
            raise _error("parse_error", exc.message, exc.position) from exc
        except EvalError as exc:
            raise _error("eval_error", str(exc)) from exc
        except (HahnError, ZeroDivisionError) as exc:
            raise _error("eval_error", str(exc)) from exc
        response = EvalResponse(kind=outcome.kind, text=outcome.text())
        if outcome.kind == "series":
            response.series = _series_payload(outcome.series)
            if outcome.truncated_below is not None:
                response.truncated_below = str(outcome.truncated_below)
        elif outcome.kind == "support":
            response.support = [str(e) for e in outcome.support]
        else:
            response.valuation = format_valuation(outcome.valuation)
        return response

    @app.post("/check", response_model=CheckResponse)
    def check_endpoint(req: CheckRequest) -> CheckResponse:
        group, field = _session(req.group, req.coeff)
        try:
            model = build_model(req.model, group, field)
        except ValueError as exc:
            raise _error("usage_error", str(exc)) from exc
        samples = SampleSet.build(group, field, seed=req.seed)
        axioms, lemmas, hahn = run_standard_checks(
            model, samples, instances_per_check=req.samples
        )
        checks = [
            CheckItemPayload(**item.to_json_dict(req.seed))
            for report in (axioms, lemmas, hahn)
            for item in report.items
        ]
        return CheckResponse(
            model=req.model,
            group=group.selector,
            coeff=field.selector,
            seed=req.seed,
            samples=req.samples,
            passed=axioms.passed and lemmas.passed and hahn.passed,
            lemmas_diagnostic=lemmas.diagnostic,
            checks=checks,
        )

    @app.post("/embed", response_model=EmbedResponse)
    def embed_endpoint(req: EmbedRequest) -> EmbedResponse:
        group, field = _session(req.group, req.coeff)
        if req.max_terms is None and req.exponent_bound is None:
            raise _error("usage_error", "embed needs --max-terms or --bound (or both)")
        try:
            value = evaluate(req.expr, group, field)
            if isinstance(value, (SupportValue, ValuationValue)):
                raise _error("usage_error", "embed needs a series-valued expression")
            bound = group.parse(req.exponent_bound) if req.exponent_bound else None
            budget = Budget(max_terms=req.max_terms, exponent_bound=bound)
            model = (
                HahnModel(group, field)
                if isinstance(value, FiniteSeries)
                else GridHahnModel(group, field)
            )
            result = embed(model, value, budget)
        except ParseError as exc:
            raise _error("parse_error", exc.message, exc.position) from exc
        except EvalError as exc:
            raise _error("eval_error", str(exc)) from exc
        except (HahnError, ZeroDivisionError) as exc:
            raise _error("eval_error", str(exc)) from exc
        data = result.to_json_dict()
        return EmbedResponse(
            group=data["group"],
            coeff=data["coeff"],
            terms=data["terms"],
            exhausted=data["exhausted"],
            terms_emitted=data["terms_emitted"],
            residual_valuation=data["residual_valuation"],
            text=_embed_text(data["terms"], data["exhausted"], data["residual_valuation"]),
        )

    return app


app = create_app()
