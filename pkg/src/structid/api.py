"""HTTP front end for the analysis service.

Endpoints:

* ``POST /api/analyze``  run one analysis, return the canonical result dict
* ``GET  /api/health``   liveness probe
* ``GET  /api/examples`` bundled structure library
* ``GET  /``             static dashboard bundle, when one has been built
"""
from __future__ import annotations

import os
from typing import Any

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .bundled import list_examples
from .service import DEFAULT_SYMBOLIC_BUDGET, AnalysisRequest, run_analysis

# Stages whose failure means the caller sent us a bad structure, not that the
# analysis itself gave up.
_INPUT_STAGES = {"parse", "edits", "validate"}


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


def _timeout_ceiling() -> float:
    raw = os.environ.get("STRUCTID_TIMEOUT_SECONDS")
    if raw is None:
        return DEFAULT_SYMBOLIC_BUDGET
    try:
        value = float(raw)
    except ValueError:
        return DEFAULT_SYMBOLIC_BUDGET
    return value if value > 0 else DEFAULT_SYMBOLIC_BUDGET


def _parse_request(body: Any) -> AnalysisRequest | str:
    """Turn a JSON body into an AnalysisRequest, or return an error string."""
    if not isinstance(body, dict):
        return "request body must be a JSON object"
    structure = body.get("structure")
    if structure is None:
        return "missing required field: structure"
    if not isinstance(structure, (str, dict)):
        return "structure must be a JSON object or a JSON-encoded string"

    edits = body.get("edits", [])
    if not isinstance(edits, list) or not all(isinstance(e, str) for e in edits):
        return "edits must be a list of strings"

    canonical = body.get("canonical_form", True)
    if not isinstance(canonical, bool):
        return "canonical_form must be a boolean"

    naming = body.get("naming_mode", "caps")
    if naming not in ("caps", "underscore"):
        return "naming_mode must be 'caps' or 'underscore'"

    seeds = body.get("seeds")
    if seeds is not None:
        if not isinstance(seeds, list) or not all(isinstance(s, int) for s in seeds):
            return "seeds must be a list of integers"
        seeds = tuple(seeds)

    positivity = body.get("positivity_filter", False)
    if not isinstance(positivity, bool):
        return "positivity_filter must be a boolean"

    ceiling = _timeout_ceiling()
    timeout = body.get("symbolic_timeout", ceiling)
    if not isinstance(timeout, (int, float)) or isinstance(timeout, bool):
        return "symbolic_timeout must be a number"
    timeout = min(float(timeout), ceiling)
    if timeout <= 0:
        timeout = ceiling

    return AnalysisRequest(
        structure=structure,
        edits=tuple(edits),
        canonical_form=canonical,
        naming_mode=naming,
        seeds=seeds,
        positivity_filter=positivity,
        symbolic_timeout=timeout,
        layout_hint=body.get("layout_hint"),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="structid", version=__version__)

    # the dashboard may be served from a different origin during development
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/api/analyze")
    async def analyze(body: dict) -> Any:  # pragma: no cover - thin wrapper
        request = _parse_request(body)
        if isinstance(request, str):
            return _bad_request(request)
        result = run_analysis(request)
        if not result.ok and result.error and result.error.get("stage") in _INPUT_STAGES:
            return _bad_request(result.error.get("message", "invalid structure"))
        return JSONResponse(status_code=200, content=result.to_dict())

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/api/examples")
    async def examples() -> dict:
        return {"examples": list_examples()}

    ui_dir = os.environ.get("STRUCTID_UI_DIR")
    if ui_dir is None:
        candidate = os.path.join(os.getcwd(), "frontend", "dist")
        if os.path.isdir(candidate):
            ui_dir = candidate
    if ui_dir and os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
