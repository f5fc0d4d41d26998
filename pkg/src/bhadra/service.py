"""HTTP API over a model repository (versioned prefix /api/v1).

Deployment assumes a trusted boundary: there is no authentication or
multi-tenancy. Every error body has the shape {code, message, findings?}
and never carries a stack trace. Request bodies are parsed by hand so the
error contract stays ours rather than the framework's.
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .attack_model import model_to_doc, parse_model
from .analytics import CorpusStats, heatmap_grid, stats_to_doc, technique_frequency
from .comparison import (
    DEFAULT_PALETTE,
    build_layers,
    comparison_to_doc,
    overlap,
)
from .errors import (
    ConflictError,
    ParseError,
    UnknownIdError,
    ValidationFailedError,
    VersionMismatchError,
)
from .repository import Repository, open_repository
from .taxonomy import Taxonomy, ValidationReport, load_taxonomy


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, findings=None):
        self.status = status
        self.code = code
        self.message = message
        self.findings = findings
        super().__init__(message)

    def response(self) -> JSONResponse:
        body = {"code": self.code, "message": self.message}
        if self.findings is not None:
            body["findings"] = self.findings
        return JSONResponse(status_code=self.status, content=body)


def _empty_stats_doc(taxonomy: Taxonomy) -> dict:
    stats = CorpusStats(
        corpus_size=0,
        taxonomy_version=taxonomy.version,
        frequency={},
        tactic_totals={t.id: 0 for t in taxonomy.tactics},
        unused=frozenset(taxonomy.technique_ids()),
    )
    return {
        "taxonomy_version": stats.taxonomy_version,
        "corpus_size": 0,
        "frequency": {},
        "tactic_totals": dict(stats.tactic_totals),
        "unused": sorted(stats.unused),
        "grid": [
            {
                "technique": cell.technique,
                "tactic_ordinal": cell.tactic_ordinal,
                "row": cell.row,
                "count": 0,
                "bucket": 0,
            }
            for cell in heatmap_grid(stats, taxonomy)
        ],
    }


def create_app(taxonomy_path: str | Path, repo_root: str | Path) -> FastAPI:
    """Build the service around one taxonomy file and one repository root."""
    taxonomy_path = Path(taxonomy_path)
    loaded = load_taxonomy(taxonomy_path)
    if isinstance(loaded, ValidationReport):
        raise ValidationFailedError(loaded, f"invalid taxonomy: {taxonomy_path}")
    taxonomy: Taxonomy = loaded
    repo: Repository = open_repository(repo_root, taxonomy)

    app = FastAPI(title="bhadra repository service", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.taxonomy = taxonomy
    app.state.repository = repo

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return exc.response()

    @app.exception_handler(Exception)
    async def handle_unexpected(_request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"code": "INTERNAL", "message": "internal server error"},
        )

    async def read_json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise ApiError(400, "PARSE_ERROR", f"request body is not JSON: {exc}")
        if not isinstance(body, dict):
            raise ApiError(400, "PARSE_ERROR", "request body must be a JSON object")
        return body

    @app.get("/api/v1/taxonomy")
    def get_taxonomy():
        # The canonical file itself, byte-for-byte.
        return Response(
            content=taxonomy_path.read_text(encoding="utf-8"),
            media_type="application/json",
        )

    @app.get("/api/v1/attacks")
    def list_attacks(
        technique: str | None = None,
        adversary: str | None = None,
        impact: str | None = None,
        text: str | None = None,
    ):
        try:
            summaries = repo.query(
                technique=technique, adversary=adversary, impact=impact, text=text
            )
        except UnknownIdError as exc:
            raise ApiError(400, "UNKNOWN_ID", str(exc))
        except ValueError as exc:
            raise ApiError(400, "ARGUMENT", str(exc))
        return {"count": len(summaries), "models": [s.to_doc() for s in summaries]}

    @app.get("/api/v1/attacks/{model_id}")
    def get_attack(model_id: str):
        try:
            model = repo.get(model_id)
        except UnknownIdError as exc:
            raise ApiError(404, "NOT_FOUND", str(exc))
        return model_to_doc(model)

    @app.put("/api/v1/attacks/{model_id}")
    async def put_attack(model_id: str, request: Request):
        body = await read_json_body(request)
        expected_modified = body.pop("expected_modified", None)
        body.setdefault("id", model_id)
        if body["id"] != model_id:
            raise ApiError(
                400, "ARGUMENT",
                f"document id {body['id']!r} does not match path id {model_id!r}",
            )
        try:
            model = parse_model(body)
        except ParseError as exc:
            raise ApiError(400, "PARSE_ERROR", str(exc))
        try:
            stored = repo.put(model, expected_modified=expected_modified)
        except ValidationFailedError as exc:
            raise ApiError(
                422, "VALIDATION_FAILED", str(exc),
                findings=exc.report.to_doc()["findings"],
            )
        except ConflictError as exc:
            raise ApiError(409, "CONFLICT", str(exc))
        except VersionMismatchError as exc:
            raise ApiError(422, "VERSION_MISMATCH", str(exc))
        return model_to_doc(stored)

    @app.delete("/api/v1/attacks/{model_id}", status_code=204)
    def delete_attack(model_id: str):
        try:
            repo.delete(model_id)
        except UnknownIdError as exc:
            raise ApiError(404, "NOT_FOUND", str(exc))
        return Response(status_code=204)

    @app.post("/api/v1/compare")
    async def compare(request: Request):
        body = await read_json_body(request)
        ids = body.get("ids")
        if not isinstance(ids, list) or len(ids) < 2:
            raise ApiError(400, "ARGUMENT", "compare needs a list of >= 2 model ids")
        palette = body.get("palette") or list(DEFAULT_PALETTE)
        if not isinstance(palette, list) or not all(
            isinstance(c, str) for c in palette
        ):
            raise ApiError(400, "ARGUMENT", "palette must be a list of color strings")
        models = []
        for model_id in ids:
            try:
                models.append(repo.get(model_id))
            except UnknownIdError as exc:
                raise ApiError(404, "NOT_FOUND", str(exc))
        try:
            matrix = overlap(models)
            layers = build_layers(models, palette, taxonomy)
        except (ValueError, VersionMismatchError) as exc:
            raise ApiError(400, "ARGUMENT", str(exc))
        return comparison_to_doc(matrix, layers, models[0].taxonomy_version)

    @app.get("/api/v1/stats")
    def get_stats():
        corpus = repo.load_all()
        if not corpus:
            return _empty_stats_doc(taxonomy)
        try:
            stats = technique_frequency(corpus, taxonomy)
        except VersionMismatchError as exc:
            raise ApiError(500, "VERSION_MISMATCH", str(exc))
        return stats_to_doc(stats, taxonomy)

    return app
