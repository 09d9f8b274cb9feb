"""HTTP facade over the engine for the decision-support UI and scripts.

Reads run against an immutable snapshot of the loaded knowledge base.
Mutations go through PUT /kb only: the body is validated as a whole, and on
success the file is rewritten and the revision bumped. The revision travels
as an ETag header on GET /kb and must come back via If-Match on PUT, so a
stale editor gets a 409 instead of clobbering newer work. What-if requests
never touch the stored KB.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..errors import ParseError
from ..schema import (
    KnowledgeBaseDoc,
    WeightFunctionConfig,
    kb_from_json,
    kb_to_json,
    load_kb,
    parse_candidate,
    save_kb,
    validate_kb,
    with_weight_config,
)
from ..voting import recommend_candidate, select_instructor_for_course
from .models import (
    AssignBody,
    AssignOut,
    CandidateBody,
    HealthOut,
    PutKbOut,
    RecommendationOut,
    WhatIfBody,
)


class KbState:
    """Holds the current (KB, revision) pair; swaps are atomic."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._current: tuple[KnowledgeBaseDoc, int] = (load_kb(self.path), 1)

    def snapshot(self) -> tuple[KnowledgeBaseDoc, int]:
        return self._current

    def replace(self, doc: KnowledgeBaseDoc, expected_revision: int) -> int | None:
        """Swap in a new KB if the caller saw the latest revision."""
        with self._lock:
            _, revision = self._current
            if expected_revision != revision:
                return None
            save_kb(doc, self.path)
            self._current = (doc, revision + 1)
            return revision + 1


def _bad_request(violations) -> JSONResponse:
    return JSONResponse(status_code=400, content={"violations": [str(v) for v in violations]})


def create_app(kb_path: str | Path) -> FastAPI:
    state = KbState(kb_path)
    app = FastAPI(title="facultas", version="0.1.0")
    app.state.kb = state

    @app.exception_handler(RequestValidationError)
    async def on_body_error(request: Request, exc: RequestValidationError):
        problems = [
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()
        ]
        return _bad_request(problems)

    @app.get("/health", response_model=HealthOut)
    def health():
        _, revision = state.snapshot()
        return {"status": "ok", "revision": revision}

    @app.get("/schema")
    def get_schema():
        kb, _ = state.snapshot()
        return kb.schema.to_json()

    @app.get("/kb")
    def get_kb():
        kb, revision = state.snapshot()
        return JSONResponse(content=kb_to_json(kb), headers={"ETag": f'"{revision}"'})

    @app.put("/kb", response_model=PutKbOut)
    def put_kb(raw: dict, if_match: str | None = Header(default=None)):
        if if_match is None:
            return _bad_request(["If-Match header with the current revision is required"])
        try:
            expected = int(if_match.strip().strip('"'))
        except ValueError:
            return _bad_request([f"If-Match: not a revision number: {if_match!r}"])
        violations = validate_kb(raw)
        if violations:
            return _bad_request(violations)
        doc = kb_from_json(raw)
        revision = state.replace(doc, expected)
        if revision is None:
            return JSONResponse(
                status_code=409,
                content={"error": f"stale revision {expected}, reload the knowledge base"},
            )
        return JSONResponse(content={"revision": revision}, headers={"ETag": f'"{revision}"'})

    def _parse(body: CandidateBody, kb: KnowledgeBaseDoc):
        return parse_candidate(body.model_dump(), kb.schema)

    @app.post("/recommend", response_model=RecommendationOut)
    def recommend(body: CandidateBody, weights: str = "on"):
        kb, _ = state.snapshot()
        try:
            candidate = _parse(body, kb)
        except ParseError as exc:
            return _bad_request(exc.problems)
        return recommend_candidate(kb, candidate, use_weights=weights != "off").to_json()

    @app.post("/recommend/whatif", response_model=RecommendationOut)
    def recommend_whatif(body: WhatIfBody):
        kb, _ = state.snapshot()
        cfg = WeightFunctionConfig(**body.weight_config.model_dump())
        try:
            candidate = _parse(body.candidate, kb)
        except ParseError as exc:
            return _bad_request(exc.problems)
        return recommend_candidate(with_weight_config(kb, cfg), candidate).to_json()

    @app.post("/assign", response_model=AssignOut)
    def assign(body: AssignBody, weights: str = "on"):
        kb, _ = state.snapshot()
        try:
            candidates = [_parse(c, kb) for c in body.candidates]
        except ParseError as exc:
            return _bad_request(exc.problems)
        try:
            selection = select_instructor_for_course(
                kb, body.course, candidates, use_weights=weights != "off"
            )
        except ValueError as exc:
            return _bad_request([str(exc)])
        return selection.to_json()

    return app
