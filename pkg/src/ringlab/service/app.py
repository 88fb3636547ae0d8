"""HTTP service exposing the calculator and the claim harness.

Every JSON body is produced by the canonical serializer, so fetching the
same report twice yields byte-identical payloads.  Domain errors map to
status 400 with a structured ``error`` object carrying the stable code.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.responses import PlainTextResponse

from .. import __version__
from ..claims import claim_info, default_corpus, run_corpus
from ..dsl import parse_ring_dsl
from ..errors import RinglabError
from ..properties import HypVariant
from ..reports import build_report, canonical_json, corpus_report, dot_lattice, dot_spectrum
from ..rings import RingTable
from .models import (
    AnalyzeRequest,
    CorpusRequest,
    LatticeRequest,
    SpectrumRequest,
    VerifyRequest,
)

app = FastAPI(title="ringlab", version=__version__)


@app.exception_handler(RinglabError)
async def _domain_error(request: Request, exc: RinglabError) -> Response:
    return Response(
        content=canonical_json({"error": exc.payload()}),
        status_code=400,
        media_type="application/json",
    )


def _json_response(payload: dict) -> Response:
    return Response(content=canonical_json(payload), media_type="application/json")


def _resolve_ring(script_text: str, name: str) -> RingTable:
    return parse_ring_dsl(script_text).get(name)


def _variants(variant: str | None) -> list[HypVariant] | None:
    if variant is None:
        return None
    if variant == "both":
        return [HypVariant.INTERSECTION, HypVariant.PRODUCT]
    return [HypVariant(variant)]


def _claim_selection(claims: list[str] | None) -> list[str] | None:
    if claims is None or claims == ["all"]:
        return None
    return claims


@app.get("/")
def root() -> Response:
    return _json_response({"service": "ringlab", "version": __version__})


@app.get("/claims")
def list_claims() -> Response:
    return _json_response({"claims": claim_info()})


@app.post("/analyze")
def analyze(req: AnalyzeRequest) -> Response:
    ring = _resolve_ring(req.script, req.ring)
    return _json_response(build_report(ring))


@app.post("/verify")
def verify(req: VerifyRequest) -> Response:
    ring = _resolve_ring(req.script, req.ring)
    verdicts = run_corpus(
        corpus=(ring,),
        ids=_claim_selection(req.claims),
        variants=_variants(req.variant),
    )
    return _json_response(build_report(ring, verdicts))


@app.post("/corpus")
def corpus(req: CorpusRequest) -> Response:
    rings = default_corpus()
    verdicts = run_corpus(
        ids=_claim_selection(req.claims),
        variants=_variants(req.variant),
    )
    return _json_response(corpus_report(rings, verdicts))


@app.post("/lattice")
def lattice(req: LatticeRequest) -> PlainTextResponse:
    ring = _resolve_ring(req.script, req.ring)
    return PlainTextResponse(dot_lattice(ring, req.which), media_type="text/vnd.graphviz")


@app.post("/spectrum")
def spectrum(req: SpectrumRequest) -> PlainTextResponse:
    ring = _resolve_ring(req.script, req.ring)
    return PlainTextResponse(dot_spectrum(ring), media_type="text/vnd.graphviz")
