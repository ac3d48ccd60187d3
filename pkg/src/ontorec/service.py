"""HTTP service and response serialization.

POST /recommend evaluates one input and returns the ranking; GET /health
reports readiness and corpus size. Score fields are rounded to 4 decimals,
display scores are 0-100 integers. Domain errors (empty input, bad weights,
unknown ontology filter, unsupported combinations) map to HTTP 400; an input
that annotates nothing is not an error and yields an empty ranking.

The serializers are plain dict builders so the CLI shares them; everything
in a response is JSON-native and deterministic for a fixed corpus + request.
"""

from __future__ import annotations

import socket
from typing import Mapping, Sequence

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ontorec.annotator import Annotation
from ontorec.config import Weights, clamp_set_size
from ontorec.corpus import OntologyRepository
from ontorec.errors import (
    EmptyInput,
    InvalidWeights,
    RecommenderError,
    UnknownOntologyFilter,
    UnsupportedRequest,
)
from ontorec.pipeline import Recommender, RecommendRequest, RecommendResponse
from ontorec.ranker import RankedEntry

_CLIENT_ERRORS = (EmptyInput, InvalidWeights, UnknownOntologyFilter, UnsupportedRequest)


def _round(value: float) -> float:
    return round(value, 4)


def serialize_annotation(ann: Annotation, repository: OntologyRepository) -> dict:
    cls = repository.get_class(ann.ontology_acronym, ann.class_id)
    return {
        "ontology": ann.ontology_acronym,
        "class_id": ann.class_id,
        "class_label": cls.preferred_label,
        "match_type": ann.match_type.value,
        "word_span": [ann.start, ann.end],
        "annotated_words": ann.annotated_words,
        "matched_text": ann.matched_text,
        "keyword_index": ann.keyword_index,
        "class_details": {
            "hierarchy_level": cls.hierarchy_level,
            "definitions": cls.definitions_count,
            "synonyms": list(cls.synonyms),
            "properties": cls.properties_count,
        },
    }


def serialize_entry(entry: RankedEntry, repository: OntologyRepository) -> dict:
    contributions = None
    if entry.contributions is not None:
        contributions = {k: _round(v) for k, v in sorted(entry.contributions.items())}
    return {
        "position": entry.position,
        "ontologies": list(entry.members),
        "final_score": _round(entry.final_score),
        "scores": {k: _round(v) for k, v in entry.scores.as_dict().items()},
        "display_scores": dict(entry.display_scores or {}),
        "annotation_count": entry.annotation_count,
        "legacy_score": _round(entry.legacy_score) if entry.legacy_score is not None else None,
        "contributions": contributions,
        "annotations": [
            serialize_annotation(a, repository) for a in entry.selected_annotations
        ],
    }


def serialize_response(response: RecommendResponse, repository: OntologyRepository) -> dict:
    keyword_spans = None
    if response.keyword_spans is not None:
        keyword_spans = [list(span) if span is not None else None for span in response.keyword_spans]
    return {
        "input_type": response.input_type,
        "output_type": response.output_type,
        "algorithm": response.algorithm,
        "tokens": list(response.tokens),
        "keywords": list(response.keywords) if response.keywords is not None else None,
        "keyword_spans": keyword_spans,
        "union_covered_words": response.union_covered_words,
        "total_candidates": response.total_candidates,
        "entries": [serialize_entry(e, repository) for e in response.entries],
    }


class RecommendBody(BaseModel):
    input: str = ""
    input_type: str = "text"
    output_type: str = "ontologies"
    wc: float | None = None
    wa: float | None = None
    wd: float | None = None
    ws: float | None = None
    max_elements_set: int = Field(default=3)
    ontologies: list[str] = Field(default_factory=list)
    algorithm: str = "v2"


def weights_from_optional(
    wc: float | None, wa: float | None, wd: float | None, ws: float | None
) -> Weights | None:
    """Build Weights from four optional values: all or none must be given."""
    given = [v for v in (wc, wa, wd, ws) if v is not None]
    if not given:
        return None
    if len(given) != 4:
        raise InvalidWeights("wc, wa, wd, ws must be provided together")
    return Weights(coverage=wc, acceptance=wa, detail=wd, specialization=ws)


def request_from_body(body: RecommendBody) -> RecommendRequest:
    return RecommendRequest(
        input=body.input,
        input_type=body.input_type,
        output_type=body.output_type,
        weights=weights_from_optional(body.wc, body.wa, body.wd, body.ws),
        max_set_size=clamp_set_size(body.max_elements_set),
        ontologies=tuple(body.ontologies),
        algorithm=body.algorithm,
    )


def create_app(recommender: Recommender, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ontorec", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "ontologies": len(recommender.repository)}

    @app.post("/recommend")
    def recommend(body: RecommendBody):
        try:
            request = request_from_body(body)
            response = recommender.recommend(request)
        except _CLIENT_ERRORS as exc:
            return JSONResponse(
                status_code=400,
                content={"error": type(exc).__name__, "detail": str(exc)},
            )
        return serialize_response(response, recommender.repository)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


def serve(
    recommender: Recommender,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: str | None = None,
) -> None:
    """Run the HTTP service; port 0 binds an ephemeral port.

    The bound address is printed before serving so callers (and scripts
    parsing stdout) learn the actual port.
    """
    import uvicorn

    app = create_app(recommender, static_dir=static_dir)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((host, port))
    bound_host, bound_port = sock.getsockname()[:2]
    print(f"serving on http://{bound_host}:{bound_port}", flush=True)
    config = uvicorn.Config(app, log_level="info")
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
