"""FastAPI application exposing the measure and classification operations."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import ValidationError
from . import handlers
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    EvaluateRequest,
    EvaluateResponse,
    HealthResponse,
    MeasureRequest,
    MeasureResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="extropy",
        version=__version__,
        description=(
            "Tsallis extropy and companion discrete information measures, "
            "interval-evidence classification, and numerical theorem checks."
        ),
    )

    @app.exception_handler(ValidationError)
    async def _validation_error(_: Request, exc: ValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=400, content={"detail": {"kind": "validation", "message": str(exc)}}
        )

    @app.exception_handler(OSError)
    async def _io_error(_: Request, exc: OSError) -> JSONResponse:
        return JSONResponse(
            status_code=404, content={"detail": {"kind": "io", "message": str(exc)}}
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/measures", response_model=MeasureResponse)
    def measures(request: MeasureRequest) -> MeasureResponse:
        return handlers.compute_measures(request)

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(request: ClassifyRequest) -> ClassifyResponse:
        return handlers.classify(request)

    @app.post("/evaluate", response_model=EvaluateResponse)
    def evaluate(request: EvaluateRequest) -> EvaluateResponse:
        return handlers.run_evaluation(request)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest) -> VerifyResponse:
        return handlers.verify(request)

    return app


app = create_app()
