"""HTTP service exposing contexts, lattices, reports and navigation sessions.

Read endpoints are pure functions of the loaded context and fully
concurrent over the immutable lattice. Navigation sessions live in
memory with idle expiry and their operations are serialized per session
id. Error bodies are always ``{"error": code, "detail": text}``.
"""

from __future__ import annotations

import itertools
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .context import load_context
from .errors import (
    GalexError,
    InvalidThreshold,
    NotAdjacent,
    UnknownAttribute,
    UnknownConcept,
    UnknownObject,
    UnknownSession,
)
from .lattice import DEFAULT_CONCEPT_CEILING, build_lattice
from .navigation import NavigationSession, start_session
from .subhierarchy import ac_poset, aoc_poset, iceberg, oc_poset
from .variability import report_from_lattice, report_json_dict

_STATUS_BY_ERROR = {
    UnknownConcept: 404,
    UnknownAttribute: 404,
    UnknownObject: 404,
    UnknownSession: 404,
    NotAdjacent: 409,
}


@dataclass
class ServiceConfig:
    context_path: Path
    host: str = "127.0.0.1"
    port: int = 8000
    ceiling: int = DEFAULT_CONCEPT_CEILING
    static_dir: Path | None = None
    session_ttl_seconds: float = 1800.0

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port must be in [1, 65535], got {self.port}")
        if self.ceiling < 1:
            raise ValueError(f"concept ceiling must be >= 1, got {self.ceiling}")


@dataclass
class _SessionEntry:
    session: NavigationSession
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_used: float = field(default_factory=time.monotonic)


class SessionStore:
    """In-memory session table with idle expiry."""

    def __init__(self, ttl_seconds: float):
        self._ttl = ttl_seconds
        self._entries: dict[str, _SessionEntry] = {}
        self._lock = threading.Lock()
        self._ids = itertools.count(1)

    def _purge(self, now: float) -> None:
        stale = [sid for sid, e in self._entries.items() if now - e.last_used > self._ttl]
        for sid in stale:
            del self._entries[sid]

    def create(self, session: NavigationSession) -> str:
        with self._lock:
            now = time.monotonic()
            self._purge(now)
            sid = f"s{next(self._ids)}"
            self._entries[sid] = _SessionEntry(session, last_used=now)
            return sid

    def get(self, sid: str) -> _SessionEntry:
        with self._lock:
            now = time.monotonic()
            self._purge(now)
            entry = self._entries.get(sid)
            if entry is None:
                raise UnknownSession(f"no live session {sid!r}")
            entry.last_used = now
            return entry


class CreateSessionBody(BaseModel):
    at: int | None = None


class TargetBody(BaseModel):
    target: int


def create_app(config: ServiceConfig) -> FastAPI:
    ctx = load_context(config.context_path)
    lattice = build_lattice(ctx, max_concepts=config.ceiling)
    store = SessionStore(config.session_ttl_seconds)

    app = FastAPI(title="galex", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(GalexError)
    async def _galex_error(_request: Request, exc: GalexError) -> JSONResponse:
        status = _STATUS_BY_ERROR.get(type(exc), 400)
        return JSONResponse(status_code=status, content={"error": exc.code, "detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=400, content={"error": "ValidationError", "detail": str(exc.errors())}
        )

    def concept_detail(cid: int) -> dict:
        upper, lower = lattice.neighbourhood(cid)
        data = lattice.concept_json(cid)
        data["upper_covers"] = list(upper)
        data["lower_covers"] = list(lower)
        data["is_valid_configuration"] = bool(lattice.introduced_objects(cid))
        return data

    def session_payload(sid: str, session: NavigationSession) -> dict:
        data = session.to_json_dict(session_id=sid)
        data["concept"] = concept_detail(session.current)
        data["moves"] = [m.to_json_dict() for m in session.available_moves()]
        return data

    @app.get("/api/context")
    def get_context() -> dict:
        return ctx.to_json_dict()

    @app.get("/api/lattice")
    def get_lattice() -> dict:
        return lattice.to_json_dict()

    @app.get("/api/concepts/{cid}")
    def get_concept(cid: int) -> dict:
        lattice._check(cid)
        return concept_detail(cid)

    @app.get("/api/report")
    def get_report(exhaustive: bool = False) -> dict:
        return report_json_dict(report_from_lattice(lattice, exhaustive=exhaustive))

    @app.get("/api/subhierarchy")
    def get_subhierarchy(kind: str, n: int | None = None) -> dict:
        kind = kind.lower()
        if kind == "aoc":
            return aoc_poset(lattice).to_json_dict()
        if kind == "ac":
            return ac_poset(lattice).to_json_dict()
        if kind == "oc":
            return oc_poset(lattice).to_json_dict()
        if kind == "iceberg":
            if n is None:
                raise InvalidThreshold("iceberg needs a threshold parameter n >= 1")
            return iceberg(lattice, n).to_json_dict()
        raise GalexError(f"unknown sub-hierarchy kind {kind!r} (aoc, ac, oc, iceberg)")

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody | None = None) -> dict:
        at = body.at if body is not None else None
        session = start_session(lattice, at)
        sid = store.create(session)
        return session_payload(sid, session)

    @app.get("/api/sessions/{sid}")
    def get_session(sid: str) -> dict:
        entry = store.get(sid)
        with entry.lock:
            return session_payload(sid, entry.session)

    @app.post("/api/sessions/{sid}/move")
    def post_move(sid: str, body: TargetBody) -> dict:
        entry = store.get(sid)
        with entry.lock:
            entry.session.apply_move(body.target)
            return session_payload(sid, entry.session)

    @app.post("/api/sessions/{sid}/jump")
    def post_jump(sid: str, body: TargetBody) -> dict:
        entry = store.get(sid)
        with entry.lock:
            entry.session.jump(body.target)
            return session_payload(sid, entry.session)

    @app.get("/api/sessions/{sid}/reachable")
    def get_reachable(sid: str) -> dict:
        entry = store.get(sid)
        with entry.lock:
            reachable = entry.session.reachable_configurations()
        return {"reachable": [{"object": o, "concept": cid} for o, cid in reachable]}

    if config.static_dir is not None and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="explorer")
    else:

        @app.get("/")
        def index() -> dict:
            return {
                "service": "galex",
                "concepts": len(lattice),
                "endpoints": [
                    "/api/context",
                    "/api/lattice",
                    "/api/concepts/{id}",
                    "/api/report",
                    "/api/subhierarchy?kind=&n=",
                    "/api/sessions",
                ],
            }

    return app


def serve(config: ServiceConfig) -> None:
    """Run the service until terminated."""
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="warning")
