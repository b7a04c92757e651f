"""Stateless playback service.

Exposes the engine over HTTP with JSON bodies so thin clients (the browser
editor in particular) never recompute model math themselves.  Every
response depends only on the request body; there is no session state.

Routes (all under /api/v1):
    GET  /patterns/defaults/{beats}   built-in pattern document
    POST /patterns/validate           validation report for a document
    POST /sample                      motion samples plus beat events
    POST /speed-profile               phase rate and tip speed over a cycle
    GET  /health                      liveness and version

Errors are ``{"code", "message", "detail?"}``: 400 ``bad_request`` or
``bad_document``, 404 ``unsupported_beats``, 422 ``invalid_pattern`` with
the validation findings embedded as ``detail``.
"""

from __future__ import annotations

import json
import math
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .motion import BeatEvent, MotionSample, beat_events, sample_trajectory, speed_profile
from .patterns import (
    SUPPORTED_DEFAULT_BEATS,
    PatternFormatError,
    ValidationReport,
    default_document,
    parse_document,
    serialize_document,
    validate_pattern,
)
from .timing import Tempo, TimingLaw

MAX_SAMPLE_COUNT = 100_000
MAX_SAMPLES_PER_SEGMENT = 4096


class _RequestError(Exception):
    def __init__(self, status: int, code: str, message: str, detail: Any = None):
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


def _error_response(status: int, code: str, message: str, detail: Any = None) -> JSONResponse:
    body: dict[str, Any] = {"code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)


def _report_payload(report: ValidationReport) -> dict[str, Any]:
    return {
        "ok": report.ok,
        "findings": [
            {
                "severity": f.severity.value,
                "code": f.code,
                "message": f.message,
                "anchor_index": f.anchor_index,
            }
            for f in report.findings
        ],
    }


def _sample_payload(sample: MotionSample) -> dict[str, float]:
    return {
        "t": sample.t,
        "s": sample.s,
        "x": sample.position.x,
        "y": sample.position.y,
        "vx": sample.velocity.x,
        "vy": sample.velocity.y,
        "phase_rate": sample.phase_rate,
        "spatial_speed": sample.spatial_speed,
    }


def _event_payload(event: BeatEvent) -> dict[str, Any]:
    return {
        "beat_index": event.beat_index,
        "kind": event.kind.value,
        "time": event.time,
        "curve_parameter": event.curve_parameter,
    }


async def _json_body(request: Request, code: str) -> dict[str, Any]:
    try:
        body = json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise _RequestError(400, code, f"malformed JSON body: {exc}") from exc
    if not isinstance(body, dict):
        raise _RequestError(400, code, "request body must be a JSON object")
    return body


def _require_finite_number(body: dict[str, Any], key: str) -> float:
    value = body.get(key)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _RequestError(400, "bad_request", f"{key!r} must be a number")
    value = float(value)
    if not math.isfinite(value):
        raise _RequestError(400, "bad_request", f"{key!r} must be finite")
    return value


def _require_int(body: dict[str, Any], key: str) -> int:
    value = body.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise _RequestError(400, "bad_request", f"{key!r} must be an integer")
    return value


def _parse_validated_pattern(body: dict[str, Any]):
    document_raw = body.get("pattern")
    if not isinstance(document_raw, dict):
        raise _RequestError(400, "bad_document", "'pattern' must be a document object")
    try:
        document = parse_document(document_raw)
    except PatternFormatError as exc:
        raise _RequestError(400, "bad_document", str(exc)) from exc
    report = validate_pattern(document.pattern)
    if not report.ok:
        raise _RequestError(
            422,
            "invalid_pattern",
            "pattern fails validation",
            detail=_report_payload(report),
        )
    return document.pattern


def _parse_law(pattern_beats: int, body: dict[str, Any]) -> TimingLaw:
    bpm = _require_finite_number(body, "bpm")
    if bpm <= 0:
        raise _RequestError(400, "bad_request", f"'bpm' must be > 0, got {bpm}")
    beta = _require_finite_number(body, "beta")
    if not 0.0 <= beta <= 1.0:
        raise _RequestError(400, "bad_request", f"'beta' must be in [0, 1], got {beta}")
    return TimingLaw(tempo=Tempo(beats=pattern_beats, bpm=bpm), speed_balance=beta)


def create_app() -> FastAPI:
    app = FastAPI(title="baton playback service", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_RequestError)
    async def _handle_request_error(_request: Request, exc: _RequestError) -> JSONResponse:
        return _error_response(exc.status, exc.code, exc.message, exc.detail)

    @app.get("/api/v1/health")
    async def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.get("/api/v1/patterns/defaults/{beats}")
    async def get_default(beats: int) -> Response:
        if beats not in SUPPORTED_DEFAULT_BEATS:
            return _error_response(
                404,
                "unsupported_beats",
                f"no built-in pattern for {beats} beats; supported counts are "
                f"{', '.join(map(str, SUPPORTED_DEFAULT_BEATS))}",
            )
        # Canonical serializer output, byte-identical to the library's.
        return Response(
            content=serialize_document(default_document(beats)),
            media_type="application/json",
        )

    @app.post("/api/v1/patterns/validate")
    async def post_validate(request: Request) -> dict[str, Any]:
        body = await _json_body(request, "bad_document")
        try:
            document = parse_document(body)
        except PatternFormatError as exc:
            raise _RequestError(400, "bad_document", str(exc)) from exc
        return _report_payload(validate_pattern(document.pattern))

    @app.post("/api/v1/sample")
    async def post_sample(request: Request) -> dict[str, Any]:
        body = await _json_body(request, "bad_request")
        pattern = _parse_validated_pattern(body)
        law = _parse_law(pattern.beats, body)
        t0 = _require_finite_number(body, "t0")
        t1 = _require_finite_number(body, "t1")
        if not 0.0 <= t0 < t1:
            raise _RequestError(
                400, "bad_request", f"need 0 <= t0 < t1, got t0={t0}, t1={t1}"
            )
        count = _require_int(body, "count")
        if not 2 <= count <= MAX_SAMPLE_COUNT:
            raise _RequestError(
                400,
                "bad_request",
                f"'count' must be in [2, {MAX_SAMPLE_COUNT}], got {count}",
            )
        samples = sample_trajectory(pattern, law, t0, t1, count)
        events = beat_events(law, t0, t1)
        return {
            "samples": [_sample_payload(s) for s in samples],
            "beat_events": [_event_payload(e) for e in events],
        }

    @app.post("/api/v1/speed-profile")
    async def post_speed_profile(request: Request) -> dict[str, Any]:
        body = await _json_body(request, "bad_request")
        pattern = _parse_validated_pattern(body)
        law = _parse_law(pattern.beats, body)
        per_segment = _require_int(body, "samples_per_segment")
        if not 2 <= per_segment <= MAX_SAMPLES_PER_SEGMENT:
            raise _RequestError(
                400,
                "bad_request",
                f"'samples_per_segment' must be in [2, {MAX_SAMPLES_PER_SEGMENT}], "
                f"got {per_segment}",
            )
        profile = speed_profile(pattern, law, per_segment)
        return {
            "profile": [
                {"t": p.t, "phase_rate": p.phase_rate, "spatial_speed": p.spatial_speed}
                for p in profile
            ]
        }

    return app
