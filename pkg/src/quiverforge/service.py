"""HTTP service mirroring the CLI operations, plus mutation sessions.

Every response body is {"ok": bool, "result": ...} or
{"ok": false, "error": ...}, serialized through the same canonical
dumper as the CLI.  Status codes: 400 malformed document, 404 unknown
session, 422 domain invariant violation, 200 otherwise (unknown verdicts
are ordinary results).
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.responses import Response

from . import membership as mb
from . import serialization as ser
from .errors import MalformedDocumentError, QuiverError
from .quiver import Quiver, mutate, apply_sequence
from .search import explore_class

DEFAULT_SESSION_TTL_SECONDS = 3600.0


@dataclass
class SessionRecord:
    """A base quiver plus the mutation steps applied so far.

    Replaying ``history`` from ``base_quiver`` reproduces every snapshot
    hash; the current quiver is the replay of the full history.
    """

    id: str
    base_quiver: Quiver
    history: list[tuple[int, str]] = field(default_factory=list)
    current: Quiver = None  # type: ignore[assignment]
    touched: float = 0.0

    def __post_init__(self) -> None:
        if self.current is None:
            self.current = self.base_quiver
        if not self.touched:
            self.touched = time.monotonic()

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "quiver": ser.quiver_to_dict(self.current),
            "hash": ser.quiver_hash(self.current),
            "history": [[step, digest] for step, digest in self.history],
        }


class _ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def _json_response(payload: Any, status: int = 200) -> Response:
    return Response(
        content=ser.dumps_canonical(payload),
        status_code=status,
        media_type="application/json",
    )


def _ok(result: Any) -> Response:
    return _json_response({"ok": True, "result": result})


def _fail(status: int, message: str) -> Response:
    return _json_response({"ok": False, "error": message}, status=status)


async def _body(request: Request) -> dict:
    try:
        doc = await request.json()
    except Exception:
        raise _ApiError(400, "request body is not valid JSON") from None
    if not isinstance(doc, dict):
        raise _ApiError(400, "request body must be a JSON object")
    return doc


def _get_quiver(doc: dict) -> Quiver:
    if "quiver" not in doc:
        raise _ApiError(400, 'request needs a "quiver" field')
    return ser.quiver_from_dict(doc["quiver"])


def create_app(session_ttl_seconds: float = DEFAULT_SESSION_TTL_SECONDS) -> FastAPI:
    app = FastAPI(title="quiverforge", docs_url=None, redoc_url=None)
    sessions: dict[str, SessionRecord] = {}

    def purge_sessions() -> None:
        cutoff = time.monotonic() - session_ttl_seconds
        stale = [sid for sid, rec in sessions.items() if rec.touched < cutoff]
        for sid in stale:
            del sessions[sid]

    def get_session(session_id: str) -> SessionRecord:
        purge_sessions()
        record = sessions.get(session_id)
        if record is None:
            raise _ApiError(404, f"unknown session {session_id!r}")
        record.touched = time.monotonic()
        return record

    @app.exception_handler(_ApiError)
    async def handle_api_error(_request: Request, exc: _ApiError) -> Response:
        return _fail(exc.status, exc.message)

    @app.exception_handler(MalformedDocumentError)
    async def handle_malformed(_request: Request, exc: MalformedDocumentError) -> Response:
        return _fail(400, str(exc))

    @app.exception_handler(QuiverError)
    async def handle_domain_error(_request: Request, exc: QuiverError) -> Response:
        return _fail(422, str(exc))

    @app.get("/api/health")
    async def health() -> Response:
        return _ok({"status": "ok"})

    @app.post("/api/mutate")
    async def mutate_endpoint(request: Request) -> Response:
        doc = await _body(request)
        q = _get_quiver(doc)
        if "vertex" in doc:
            steps = [doc["vertex"]]
        elif "sequence" in doc:
            steps = doc["sequence"]
        else:
            raise _ApiError(400, 'request needs "vertex" or "sequence"')
        if not isinstance(steps, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in steps
        ):
            raise _ApiError(400, "mutation steps must be integers")
        return _ok(ser.quiver_to_dict(apply_sequence(q, steps)))

    @app.post("/api/analyze")
    async def analyze_endpoint(request: Request) -> Response:
        doc = await _body(request)
        return _ok(ser.analysis_report(_get_quiver(doc)))

    @app.post("/api/search")
    async def search_endpoint(request: Request) -> Response:
        doc = await _body(request)
        q = _get_quiver(doc)
        budget = ser.budget_from_dict(doc.get("budget"))
        return _ok(ser.exploration_to_dict(explore_class(q, budget)))

    @app.post("/api/certify")
    async def certify_endpoint(request: Request) -> Response:
        doc = await _body(request)
        q = _get_quiver(doc)
        class_id = ser.class_id_from_string(doc.get("class"))
        budget = ser.budget_from_dict(doc.get("budget"))
        verdict = mb.derive_certificate(q, class_id, budget)
        return _ok(ser.certify_result_to_dict(class_id, verdict))

    @app.post("/api/checkcert")
    async def checkcert_endpoint(request: Request) -> Response:
        doc = await _body(request)
        q = _get_quiver(doc)
        if "certificate" not in doc:
            raise _ApiError(400, 'request needs a "certificate" field')
        class_id = ser.class_id_from_string(doc.get("class"))
        cert = ser.certificate_from_dict(doc["certificate"])
        try:
            valid = mb.check_certificate(q, cert, class_id)
        except MalformedDocumentError:
            raise
        except QuiverError:
            valid = False
        return _ok({"class": class_id.value, "valid": valid})

    @app.post("/api/session")
    async def create_session(request: Request) -> Response:
        doc = await _body(request)
        q = _get_quiver(doc)
        purge_sessions()
        record = SessionRecord(id=uuid.uuid4().hex, base_quiver=q)
        sessions[record.id] = record
        return _ok(record.snapshot())

    @app.post("/api/session/{session_id}/mutate")
    async def session_mutate(session_id: str, request: Request) -> Response:
        doc = await _body(request)
        record = get_session(session_id)
        vertex = doc.get("vertex")
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            raise _ApiError(400, 'request needs an integer "vertex"')
        mutated = mutate(record.current, vertex)
        record.current = mutated
        record.history.append((vertex, ser.quiver_hash(mutated)))
        return _ok(record.snapshot())

    @app.post("/api/session/{session_id}/undo")
    async def session_undo(session_id: str, request: Request) -> Response:
        record = get_session(session_id)
        if not record.history:
            raise _ApiError(422, "nothing to undo")
        record.history.pop()
        replay = record.base_quiver
        for step, _digest in record.history:
            replay = mutate(replay, step)
        record.current = replay
        return _ok(record.snapshot())

    return app
