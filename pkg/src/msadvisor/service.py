"""HTTP facade: JSON API over the knowledge base and decision engine."""

from __future__ import annotations

import os
import secrets
import threading
import time
from pathlib import Path
from typing import Callable

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from . import payloads
from .builtin import builtin_kb
from .engine import (
    Session,
    apply_answer,
    pending_decisions,
    score_patterns,
    session_result,
    start_session,
    resolve_weights,
    tradeoff_report,
)
from .kb import KbParseError, KbValidationError, KnowledgeBase, load_kb_file
from .model import AdvisorError

DEFAULT_PORT = 8080
DEFAULT_SESSION_TTL = 3600.0

_STATUS_BY_CODE = {
    "E_UNKNOWN_MODEL": 404,
    "E_UNKNOWN_SESSION": 404,
    "E_UNKNOWN_PATTERN": 422,
    "E_UNKNOWN_QA": 422,
    "E_BAD_WEIGHT": 422,
    "E_BAD_EDGE": 422,
    "E_INCOMPLETE": 422,
    "E_CHOICE_ARITY": 409,
    "E_NOT_PENDING": 409,
    "E_BAD_REQUEST": 400,
}


class SessionStore:
    """Expiring map of opaque ids to sessions; per-session updates are serialized."""

    def __init__(self, ttl_seconds: float = DEFAULT_SESSION_TTL, clock: Callable[[], float] = time.monotonic):
        self._ttl = ttl_seconds
        self._clock = clock
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._touched: dict[str, float] = {}
        self._locks: dict[str, threading.Lock] = {}

    def _expired(self, sid: str, now: float) -> bool:
        return now - self._touched[sid] > self._ttl

    def _purge(self, now: float) -> None:
        for sid in [s for s in self._touched if self._expired(s, now)]:
            self._sessions.pop(sid, None)
            self._touched.pop(sid, None)
            self._locks.pop(sid, None)

    def create(self, session: Session) -> Session:
        with self._lock:
            now = self._clock()
            self._purge(now)
            sid = secrets.token_urlsafe(16)
            session = Session(sid, session.model_id, session.tokens, session.selected, session.log)
            self._sessions[sid] = session
            self._touched[sid] = now
            self._locks[sid] = threading.Lock()
            return session

    def _entry(self, sid: str) -> tuple[Session, threading.Lock]:
        with self._lock:
            now = self._clock()
            if sid not in self._sessions or self._expired(sid, now):
                self._purge(now)
                raise AdvisorError("E_UNKNOWN_SESSION", f"unknown or expired session {sid!r}")
            self._touched[sid] = now
            return self._sessions[sid], self._locks[sid]

    def get(self, sid: str) -> Session:
        session, _ = self._entry(sid)
        return session

    def update(self, sid: str, fn: Callable[[Session], Session]) -> Session:
        _, lock = self._entry(sid)
        with lock:
            session = self.get(sid)
            session = fn(session)
            with self._lock:
                self._sessions[sid] = session
            return session


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=payloads.canonical_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(code: str, message: str) -> Response:
    status = _STATUS_BY_CODE.get(code, 400)
    return _json_response({"code": code, "message": message}, status)


async def _body(request: Request) -> dict:
    try:
        data = await request.json()
    except Exception as exc:
        raise AdvisorError("E_BAD_REQUEST", f"request body is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise AdvisorError("E_BAD_REQUEST", "request body must be a JSON object")
    return data


def _field(data: dict, key: str, kind: type) -> object:
    value = data.get(key)
    if not isinstance(value, kind):
        raise AdvisorError("E_BAD_REQUEST", f"body field {key!r} must be a {kind.__name__}")
    return value


def create_app(
    kb: KnowledgeBase | None = None,
    *,
    session_ttl: float = DEFAULT_SESSION_TTL,
    static_dir: str | os.PathLike | None = None,
    clock: Callable[[], float] = time.monotonic,
) -> FastAPI:
    kb = kb or builtin_kb()
    store = SessionStore(session_ttl, clock)
    app = FastAPI(title="msadvisor", docs_url=None, redoc_url=None)

    @app.exception_handler(AdvisorError)
    async def _domain_error(_request: Request, exc: AdvisorError) -> Response:
        return _error_response(exc.code, exc.message)

    @app.get("/health")
    async def health() -> Response:
        return _json_response({"status": "ok"})

    @app.get("/models")
    async def list_models() -> Response:
        return _json_response(payloads.model_list_payload(kb))

    @app.get("/models/{model_id}")
    async def get_model(model_id: str) -> Response:
        return _json_response(payloads.model_payload(kb, kb.model(model_id)))

    @app.post("/sessions")
    async def create_session(request: Request) -> Response:
        data = await _body(request)
        model_id = _field(data, "model", str)
        session = store.create(start_session(kb, model_id))
        return _json_response(
            payloads.session_payload(session, pending_decisions(kb, session)), 201
        )

    @app.post("/sessions/{sid}/answers")
    async def submit_answer(sid: str, request: Request) -> Response:
        data = await _body(request)
        gateway = _field(data, "gateway", str)
        edges = _field(data, "edges", list)
        if any(not isinstance(e, str) for e in edges):
            raise AdvisorError("E_BAD_REQUEST", "body field 'edges' must be a list of strings")
        session = store.update(sid, lambda s: apply_answer(kb, s, gateway, edges))
        return _json_response(payloads.session_payload(session, pending_decisions(kb, session)))

    @app.get("/sessions/{sid}/result")
    async def fetch_result(sid: str) -> Response:
        session = store.get(sid)
        return _json_response(payloads.result_payload(session, session_result(kb, session)))

    @app.post("/recommend")
    async def recommend(request: Request) -> Response:
        data = await _body(request)
        model_id = _field(data, "model", str)
        weights = _field(data, "weights", dict)
        resolve_weights(kb, weights, unit_interval=True)
        return _json_response(
            payloads.ranking_payload(model_id, score_patterns(kb, model_id, weights))
        )

    @app.post("/tradeoff")
    async def tradeoff(request: Request) -> Response:
        data = await _body(request)
        patterns = _field(data, "patterns", list)
        if any(not isinstance(p, str) for p in patterns):
            raise AdvisorError("E_BAD_REQUEST", "body field 'patterns' must be a list of strings")
        return _json_response(payloads.tradeoff_payload(tradeoff_report(kb, patterns)))

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def kb_from_env() -> KnowledgeBase:
    path = os.environ.get("ADVISOR_KB")
    if not path:
        return builtin_kb()
    try:
        return load_kb_file(path)
    except (KbParseError, KbValidationError) as exc:
        raise SystemExit(f"cannot load knowledge base {path!r}: {exc.message}") from exc


def main() -> None:
    import uvicorn

    port = int(os.environ.get("ADVISOR_PORT", DEFAULT_PORT))
    static_dir = os.environ.get("ADVISOR_STATIC")
    if static_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        static_dir = str(candidate) if candidate.is_dir() else None
    app = create_app(kb_from_env(), static_dir=static_dir)
    uvicorn.run(app, host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
