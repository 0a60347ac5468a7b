"""Stateless HTTP API over the evaluation engine.

Every response is a pure function of the request body.  Successful
responses are rendered through the same canonical JSON encoder the CLI
uses, so identical requests always yield identical bytes.

Endpoints (all bodies are JSON):

* ``POST /v1/evaluate`` with ``{"problem": <document>, "method"?, "lambda"?}``
* ``POST /v1/sensitivity/lambda`` with ``{"problem", "method"?, "lambdas": [..]}``
* ``POST /v1/sensitivity/weight`` with ``{"problem", "method"?, "lambda"?,
  "criterion" and "delta"}`` or a batched ``"deltas"`` array
* ``GET /v1/health``

Errors: 400 for malformed or semantically invalid bodies (with the
offending field path when known), 422 when the requested method does not
match the document's mode.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__, io, report
from .engine import METHOD_BY_MODE, evaluate
from .errors import (
    MethodMismatch,
    ProblemSyntaxError,
    SchemaError,
    TodimError,
    ValidationError,
)
from .io import ProblemDocument
from .report import ranks_from_order
from .weights import raw_weights, vector_from_raw


class _ApiError(Exception):
    """Carries a ready-to-send error response."""

    def __init__(self, status: int, error: str, message: str, path: str | None = None):
        super().__init__(message)
        self.status = status
        self.payload: dict[str, Any] = {"error": error, "message": message}
        if path is not None:
            self.payload["path"] = path


def _bad_request(message: str, path: str | None = None) -> _ApiError:
    return _ApiError(400, "validation", message, path)


def _translate(exc: Exception) -> _ApiError:
    if isinstance(exc, _ApiError):
        return exc
    if isinstance(exc, ProblemSyntaxError):
        return _ApiError(400, "syntax", str(exc))
    if isinstance(exc, SchemaError):
        return _ApiError(400, "schema", exc.reason, _prefixed(exc.path))
    if isinstance(exc, ValidationError):
        return _ApiError(400, "validation", exc.reason, _prefixed(exc.path))
    if isinstance(exc, MethodMismatch):
        return _ApiError(422, "method_mismatch", str(exc))
    if isinstance(exc, TodimError):
        return _bad_request(str(exc))
    raise exc


def _prefixed(path: str) -> str:
    # Document errors are reported relative to the request body.
    return f"problem.{path}" if path else "problem"


async def _body(request: Request) -> dict[str, Any]:
    try:
        data = await request.json()
    except json.JSONDecodeError as exc:
        raise _ApiError(400, "syntax", str(exc)) from None
    if not isinstance(data, dict):
        raise _ApiError(400, "schema", "expected an object body")
    return data


def _document(body: dict[str, Any], allowed: set[str]) -> ProblemDocument:
    unknown = set(body) - allowed
    if unknown:
        raise _ApiError(400, "schema", f"unknown keys {sorted(unknown)}")
    if "problem" not in body:
        raise _ApiError(400, "schema", "missing key 'problem'", "problem")
    return io.document_from_data(body["problem"])


def _check_method(body: dict[str, Any], document: ProblemDocument) -> None:
    if "method" not in body:
        return
    requested = body["method"]
    expected = METHOD_BY_MODE[document.problem.mode]
    if requested != expected:
        raise MethodMismatch(
            f"method {requested!r} does not match the document's {expected!r} problem"
        )


def _lambda_override(body: dict[str, Any]) -> float | None:
    if "lambda" not in body:
        return None
    value = body["lambda"]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise _ApiError(400, "schema", "expected a number", "lambda")
    if value <= 0.0:
        raise _bad_request("must be positive", "lambda")
    return float(value)


def _canonical(payload: Any) -> Response:
    return Response(content=io.canonical_json(payload), media_type="application/json")


def create_app(static_dir: str | Path | None = None) -> FastAPI:
    """Build the application; optionally serve a static UI from ``static_dir``."""
    app = FastAPI(title="todim", version=__version__, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_ApiError)
    async def _on_api_error(_request: Request, exc: _ApiError) -> JSONResponse:
        return JSONResponse(status_code=exc.status, content=exc.payload)

    @app.exception_handler(TodimError)
    async def _on_todim_error(_request: Request, exc: TodimError) -> JSONResponse:
        translated = _translate(exc)
        return JSONResponse(status_code=translated.status, content=translated.payload)

    @app.get("/v1/health")
    async def health() -> Response:
        return _canonical({"status": "ok", "version": __version__})

    @app.post("/v1/evaluate")
    async def evaluate_endpoint(request: Request) -> Response:
        body = await _body(request)
        document = _document(body, {"problem", "method", "lambda"})
        _check_method(body, document)
        lam = _lambda_override(body)
        evaluation = evaluate(document.problem, lam=lam)
        return _canonical(report.evaluation_payload(evaluation, document.notes()))

    @app.post("/v1/sensitivity/lambda")
    async def lambda_endpoint(request: Request) -> Response:
        body = await _body(request)
        document = _document(body, {"problem", "method", "lambdas"})
        _check_method(body, document)
        if "lambdas" not in body:
            raise _ApiError(400, "schema", "missing key 'lambdas'", "lambdas")
        values = body["lambdas"]
        if not isinstance(values, list):
            raise _ApiError(400, "schema", "expected an array", "lambdas")
        if not values:
            raise _bad_request("needs at least one value", "lambdas")
        lambdas = []
        for i, value in enumerate(values):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise _ApiError(400, "schema", "expected a number", f"lambdas[{i}]")
            if value <= 0.0:
                raise _bad_request("must be positive", f"lambdas[{i}]")
            lambdas.append(float(value))
        names = document.problem.alternatives
        entries = []
        for lam in lambdas:
            ranking = evaluate(document.problem, lam=lam).ranking
            entries.append(
                {
                    "lambda": ranking.lam,
                    "overall": list(ranking.overall),
                    "order": [names[i] for i in ranking.order],
                }
            )
        return _canonical(entries)

    @app.post("/v1/sensitivity/weight")
    async def weight_endpoint(request: Request) -> Response:
        body = await _body(request)
        document = _document(body, {"problem", "method", "lambda", "criterion", "delta", "deltas"})
        _check_method(body, document)
        lam = _lambda_override(body)
        problem = document.problem
        deltas = _weight_deltas(body, problem.criterion_count)
        raw = list(raw_weights(problem.weights))
        for j, delta in enumerate(deltas):
            raw[j] += delta
        vector = vector_from_raw(problem.mode, raw)
        evaluation = evaluate(problem, lam=lam, weights=vector)
        ranking = evaluation.ranking
        names = problem.alternatives
        return _canonical(
            {
                "method": ranking.method,
                "lambda": ranking.lam,
                "weights": {
                    "values": list(vector.weights),
                    "relative": list(vector.relative),
                    "reference": vector.reference,
                    "relative_sum": vector.relative_sum,
                },
                "overall": list(ranking.overall),
                "order": [names[i] for i in ranking.order],
                "ranks": list(ranks_from_order(ranking.order, len(names))),
            }
        )

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def _weight_deltas(body: dict[str, Any], count: int) -> list[float]:
    """Resolve single ``criterion``/``delta`` or batched ``deltas`` to one list."""
    single = "criterion" in body or "delta" in body
    batched = "deltas" in body
    if single and batched:
        raise _ApiError(400, "schema", "give either criterion/delta or deltas, not both")
    if batched:
        values = body["deltas"]
        if not isinstance(values, list):
            raise _ApiError(400, "schema", "expected an array", "deltas")
        if len(values) != count:
            raise _bad_request(f"expected {count} entries, got {len(values)}", "deltas")
        deltas = []
        for i, value in enumerate(values):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise _ApiError(400, "schema", "expected a number", f"deltas[{i}]")
            deltas.append(float(value))
        return deltas
    if "criterion" not in body:
        raise _ApiError(400, "schema", "missing key 'criterion'", "criterion")
    if "delta" not in body:
        raise _ApiError(400, "schema", "missing key 'delta'", "delta")
    index = body["criterion"]
    if not isinstance(index, int) or isinstance(index, bool):
        raise _ApiError(400, "schema", "expected an integer", "criterion")
    if not 0 <= index < count:
        raise _bad_request(f"criterion index {index} out of range", "criterion")
    delta = body["delta"]
    if not isinstance(delta, (int, float)) or isinstance(delta, bool):
        raise _ApiError(400, "schema", "expected a number", "delta")
    deltas = [0.0] * count
    deltas[index] = float(delta)
    return deltas
