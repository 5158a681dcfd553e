"""Local conversion service backing the browser workspace.

Endpoints:
  GET  /         the single-page workspace (built UI when present, a
                 minimal fallback page otherwise)
  GET  /guide    the authoring reference, plain text
  POST /convert  stateless conversion; 200 with the manifest (artifact
                 contents inline) or 422 with the issue list

Every request is independent; there is no shared mutable state, so
concurrent conversions are safe by construction.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

from fastapi import FastAPI
from fastapi.responses import FileResponse, HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .guide import reference_guide
from .parser import ParseError
from .pipeline import (
    ALL_KINDS,
    ConversionRequest,
    OutputKind,
    convert,
    issue_to_dict,
    manifest_to_dict,
)
from .questionnaire import DocFormat
from .weights import WeightPolicy

UI_DIR_ENV = "MDQUIZ_UI"

_FALLBACK_PAGE = """\
<!DOCTYPE html>
<html lang="en">
<head><meta charset="utf-8"/><title>mdquiz</title></head>
<body>
<h1>mdquiz conversion service</h1>
<p>The browser workspace is not built. The API is up:</p>
<ul>
<li><a href="/guide">GET /guide</a> - the authoring reference</li>
<li>POST /convert - convert a document (JSON body: source, formats, policy, doc_format)</li>
</ul>
</body>
</html>
"""


class ConvertBody(BaseModel):
    source: str
    formats: list[Literal["xml", "md", "student", "key"]] | None = None
    policy: Literal["none", "balanced"] = "none"
    doc_format: Literal["md", "html", "doc"] = "md"


def default_ui_dir() -> Path | None:
    """The built workspace: $MDQUIZ_UI, or ./frontend/dist when present."""
    env = os.environ.get(UI_DIR_ENV)
    if env:
        return Path(env)
    candidate = Path("frontend") / "dist"
    return candidate if candidate.is_dir() else None


def create_app(ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="mdquiz", docs_url=None, redoc_url=None)
    index = ui_dir / "index.html" if ui_dir is not None else None

    @app.get("/", response_model=None)
    def workspace() -> FileResponse | HTMLResponse:
        if index is not None and index.is_file():
            return FileResponse(index)
        return HTMLResponse(_FALLBACK_PAGE)

    @app.get("/guide", response_class=PlainTextResponse)
    def guide() -> str:
        return reference_guide()

    @app.post("/convert")
    def convert_endpoint(body: ConvertBody) -> JSONResponse:
        if body.formats is None:
            formats = ALL_KINDS
        else:
            formats = frozenset(OutputKind(token) for token in body.formats)
        request = ConversionRequest(
            source=body.source,
            formats=formats,
            policy=WeightPolicy(body.policy),
            doc_format=DocFormat(body.doc_format),
        )
        try:
            manifest = convert(request)
        except ParseError as exc:
            return JSONResponse(
                status_code=422,
                content={"issues": [issue_to_dict(issue) for issue in exc.issues]},
            )
        return JSONResponse(manifest_to_dict(manifest))

    if ui_dir is not None and (ui_dir / "assets").is_dir():
        app.mount("/assets", StaticFiles(directory=ui_dir / "assets"), name="assets")

    return app
