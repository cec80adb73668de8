"""HTTP/JSON facade over a loaded index snapshot.

Read-only: every request runs against the same immutable Index, so
concurrent handling needs no locking.  Ingestion happens offline through
the CLI `index` command.

  GET  /health          -> {status, documents}; 503 until an index is loaded
  POST /query           -> ranked results, context groups, timing
  GET  /captions/{id}   -> one raw record
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .contexts import NONE_CONTEXT
from .index import (
    DEFAULT_ALPHA,
    DEFAULT_K_CANDIDATES,
    Index,
    RetrievalParams,
    group_results,
    retrieve,
)
from .errors import AnvilError, EmptyQuery
from .matcher import MatchConfig, SimilarityProvider
from .rules import ContextRule, RuleSet


class QueryRequest(BaseModel):
    query: str
    limit: int = Field(default=10, ge=1, le=100)
    alpha: float | None = Field(default=None, ge=0.0, le=1.0)
    exclude_contexts: list[tuple[str, str]] | None = None


def _has_excluded(result, excluded: set[tuple[str, str]]) -> bool:
    present = {(c.anchor_lemma, c.text.lower()) for c in result.contexts}
    if present & excluded:
        return True
    # a ({none}) exclusion matches results where the anchor matched but
    # contributed no context
    anchors_with_context = {c.anchor_lemma for c in result.contexts}
    for anchor, text in excluded:
        if text == NONE_CONTEXT and anchor in result.anchors \
                and anchor not in anchors_with_context:
            return True
    return False


def create_app(index: Index | None = None, *, ruleset: RuleSet | None = None,
               context_rules: list[ContextRule] | None = None,
               sim: SimilarityProvider | None = None,
               alpha: float = DEFAULT_ALPHA,
               k_candidates: int = DEFAULT_K_CANDIDATES,
               match_config: MatchConfig | None = None,
               ui_origin: str = "*") -> FastAPI:
    """Build the service; `index` may be attached later via app.state.index."""
    app = FastAPI(title="anvil retrieval service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[ui_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.index = index
    app.state.ruleset = ruleset
    app.state.context_rules = context_rules
    app.state.sim = sim if sim is not None else SimilarityProvider()
    app.state.alpha = alpha
    app.state.k_candidates = k_candidates
    app.state.match_config = match_config if match_config is not None else MatchConfig()

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed request"})

    @app.get("/health")
    def health():
        if app.state.index is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        return {"status": "ok", "documents": app.state.index.doc_count}

    @app.post("/query")
    def query(request: QueryRequest):
        if app.state.index is None:
            return JSONResponse(status_code=503, content={"error": "index not loaded"})
        if not request.query.strip():
            return JSONResponse(status_code=422, content={"error": "empty query"})
        started = time.perf_counter()
        params = RetrievalParams(
            k_candidates=app.state.k_candidates,
            limit=request.limit,
            alpha=request.alpha if request.alpha is not None else app.state.alpha,
            match_config=app.state.match_config,
        )
        try:
            results = retrieve(
                app.state.index, request.query, app.state.ruleset,
                app.state.context_rules, params, app.state.sim,
            )
        except EmptyQuery:
            return JSONResponse(status_code=422, content={"error": "empty query"})
        except AnvilError as exc:
            return JSONResponse(status_code=400, content={"error": str(exc)})
        if request.exclude_contexts:
            excluded = {(a, t.lower()) for a, t in request.exclude_contexts}
            results = [r for r in results if not _has_excluded(r, excluded)]
        groups = group_results(results)
        timing_ms = (time.perf_counter() - started) * 1000.0
        return {
            "results": [
                {
                    "id": r.id,
                    "caption": r.caption,
                    **({"image_uri": r.image_uri} if r.image_uri is not None else {}),
                    "combined_score": r.combined_score,
                    "phrase_score": r.phrase_score,
                    "simple_score": r.simple_score,
                    "contexts": [
                        {"anchor": c.anchor_lemma, "text": c.text, "category": c.category}
                        for c in r.contexts
                    ],
                }
                for r in results
            ],
            "groups": [
                {
                    "anchor": g.anchor_lemma,
                    "context": g.context_text,
                    "count": g.count,
                    "ids": list(g.caption_ids),
                }
                for g in groups
            ],
            "timing_ms": timing_ms,
        }

    @app.get("/captions/{caption_id}")
    def caption(caption_id: str):
        if app.state.index is None:
            return JSONResponse(status_code=503, content={"error": "index not loaded"})
        record = app.state.index.records.get(caption_id)
        if record is None:
            return JSONResponse(status_code=404, content={"error": "unknown caption id"})
        out = {"id": record.id, "caption": record.caption}
        if record.image_uri is not None:
            out["image_uri"] = record.image_uri
        return out

    return app
