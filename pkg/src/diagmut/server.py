"""Stateless JSON-over-HTTP service exposing classify/mutate/validate/orbit.

Every endpoint is a pure function of its request body.  Diagrams travel
as the JSON document format of :mod:`diagmut.io`; errors map to 400
(parse/axiom violations), 422 (unknown vertex) and 503 (enumeration
limit exceeded).
"""
from __future__ import annotations

import json
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import io
from .diagram import Diagram, validate
from .orbit import enumerate_class
from .recognize import classify


def _parse_document(doc: dict) -> Diagram:
    try:
        return io.parse(json.dumps(doc))
    except io.ValidationError as e:
        raise HTTPException(status_code=400, detail={
            "error": "validation",
            "violations": [{"code": v.code, "message": v.message}
                           for v in e.violations]})
    except io.ParseError as e:
        raise HTTPException(status_code=400, detail={
            "error": "parse", "message": str(e)})


def classification_payload(d: Diagram) -> dict:
    cls = classify(d)
    if cls is None:
        return {"type": None, "rank": None, "family": None,
                "params": None, "width": None, "display": "Unknown"}
    fid = cls.match.family
    return {"type": cls.dynkin_type,
            "rank": cls.rank,
            "family": fid.kind,
            "params": {"n": fid.n, "m": fid.m,
                       "stars": list(fid.stars) if fid.stars else None},
            "width": cls.match.width,
            "display": cls.type_display}


def family_census(members) -> dict[str, int]:
    census: dict[str, int] = {}
    for d in members:
        cls = classify(d)
        key = cls.match.family.kind if cls else "Unknown"
        census[key] = census.get(key, 0) + 1
    return dict(sorted(census.items()))


class DiagramRequest(BaseModel):
    diagram: dict


class MutateRequest(BaseModel):
    diagram: dict
    vertex: str


class OrbitRequest(BaseModel):
    diagram: dict
    max_members: Optional[int] = 100000
    max_steps: Optional[int] = 1000000


def create_app() -> FastAPI:
    app = FastAPI(title="diagmut", version="1")

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/classify")
    def classify_endpoint(req: DiagramRequest):
        return classification_payload(_parse_document(req.diagram))

    @app.post("/v1/validate")
    def validate_endpoint(req: DiagramRequest):
        try:
            d = io.parse(json.dumps(req.diagram))
        except io.ValidationError as e:
            return {"violations": [{"code": v.code, "message": v.message}
                                   for v in e.violations]}
        except io.ParseError as e:
            raise HTTPException(status_code=400, detail={
                "error": "parse", "message": str(e)})
        return {"violations": [{"code": v.code, "message": v.message}
                               for v in validate(d)]}

    @app.post("/v1/mutate")
    def mutate_endpoint(req: MutateRequest):
        d = _parse_document(req.diagram)
        if req.vertex not in d.labels:
            raise HTTPException(status_code=422, detail={
                "error": "unknown-vertex", "vertex": req.vertex})
        k = d.labels.index(req.vertex)
        return {"diagram": io.to_document(d.mutate(k))}

    @app.post("/v1/orbit")
    def orbit_endpoint(req: OrbitRequest):
        d = _parse_document(req.diagram)
        cs = enumerate_class(d, max_members=req.max_members or 100000,
                             max_steps=req.max_steps or 1000000)
        if not cs.exhausted:
            raise HTTPException(status_code=503, detail={
                "error": "limit-exceeded", "size_so_far": cs.size})
        return {"size": cs.size, "exhausted": True,
                "census": family_census(cs.members.values())}

    return app


app = create_app()
