"""Stateless JSON API over the analysis payload.

POST /api/v1/analyze   scenario JSON (+ optional r_candidate, resolution)
POST /api/v1/sweep     scenario JSON with a sweep block (or explicit sweep)
GET  /api/v1/health

Malformed input answers 400, admissibility violations 422, both as
{code, path, message}.  Identical requests produce identical responses.
"""

from __future__ import annotations

import json
import math
from typing import Sequence

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import payloads
from .errors import Inadmissible, ParseError, RegionError, ValidationError
from .io_cli import ScenarioFile, SweepSpec, parse_scenario_obj, resolve_outcome
from .sweep import DEFAULT_RESOLUTION, emit_csv, series_to_dict, sweep_br_mu, sweep_br_rho


def _error_response(err: RegionError) -> JSONResponse:
    status = 422 if isinstance(err, Inadmissible) else 400
    return JSONResponse(status_code=status, content=err.to_dict())


async def _read_json(request: Request) -> dict:
    raw = await request.body()
    try:
        decoded = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"request body is not valid UTF-8 JSON: {exc}", path="") from exc
    if not isinstance(decoded, dict):
        raise ParseError("request body must be a JSON object", path="")
    return decoded


def _candidate(body: dict) -> float | None:
    if "r_candidate" not in body or body["r_candidate"] is None:
        return None
    value = body["r_candidate"]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(float(value)):
        raise ValidationError(
            "r_candidate must be a finite number", path="r_candidate", constraint="number"
        )
    return float(value)


def _resolution(body: dict) -> int:
    value = body.get("resolution", DEFAULT_RESOLUTION)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("resolution must be an integer", path="resolution", constraint="integer")
    if not 2 <= value <= 100_000:
        raise ValidationError(
            f"resolution must be in [2, 100000], got {value}", path="resolution", constraint="range"
        )
    return value


def _scenario_from_body(body: dict) -> ScenarioFile:
    doc = {k: v for k, v in body.items() if k not in ("r_candidate", "resolution", "format")}
    return parse_scenario_obj(doc)


def create_app(cors_origins: Sequence[str] = ("*",)) -> FastAPI:
    app = FastAPI(title="merger-er-lab", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/v1/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/v1/analyze")
    async def analyze(request: Request) -> Response:
        try:
            body = await _read_json(request)
            r_candidate = _candidate(body)
            resolution = _resolution(body)
            scenario = _scenario_from_body(body)
            pair, outcome = resolve_outcome(scenario)
            doc = payloads.build_analysis(
                pair, outcome, r_candidate=r_candidate, resolution=resolution
            )
        except RegionError as err:
            return _error_response(err)
        return JSONResponse(doc)

    @app.post("/api/v1/sweep")
    async def sweep(request: Request) -> Response:
        try:
            body = await _read_json(request)
            fmt = body.get("format", "json")
            if fmt not in ("json", "csv"):
                raise ValidationError(
                    f"format must be json or csv, got {fmt!r}", path="format", constraint="json | csv"
                )
            scenario = _scenario_from_body(body)
            if scenario.sweep is None:
                raise ValidationError(
                    "scenario has no sweep block", path="sweep", constraint="present"
                )
            spec: SweepSpec = scenario.sweep
            pair, _ = resolve_outcome(scenario)
            if spec.parameter == "mu_m":
                series = sweep_br_mu(pair, spec.range, spec.samples)
            else:
                series = sweep_br_rho(pair, spec.range, spec.samples)
        except RegionError as err:
            return _error_response(err)
        if fmt == "csv":
            return Response(content=emit_csv(series), media_type="text/csv")
        return JSONResponse(series_to_dict(series))

    return app


app = create_app()
