"""JSON document format for diagrams.

A document is a JSON object::

    {"format_version": 1,
     "vertices": [{"id": "0"}, {"id": "1", "label": "x"}],
     "edges": [{"tail": "0", "head": "1", "weight": 2}]}

Parsing is strict: the version field is mandatory, unknown fields are
rejected, ids must be unique and edges must reference declared ids.
Serialization is deterministic (vertices and edges sorted, fixed key
order), so serialized bytes are stable across runs.
"""
from __future__ import annotations

import json
from typing import Union

from .diagram import Diagram, validate

FORMAT_VERSION = 1


class ParseError(Exception):
    """Malformed document: wrong JSON shape, fields, ids or references."""


class ValidationError(Exception):
    """Structurally well-formed document describing an invalid diagram."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


def _require_obj(value, where: str, required: dict, optional: dict) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected an object, got {type(value).__name__}")
    unknown = set(value) - set(required) - set(optional)
    if unknown:
        raise ParseError(f"{where}: unknown field(s) {sorted(unknown)}")
    out = {}
    for name, typ in required.items():
        if name not in value:
            raise ParseError(f"{where}: missing field '{name}'")
        if not isinstance(value[name], typ) or isinstance(value[name], bool):
            raise ParseError(f"{where}: field '{name}' must be {typ.__name__}")
        out[name] = value[name]
    for name, typ in optional.items():
        if name in value:
            if not isinstance(value[name], typ) or isinstance(value[name], bool):
                raise ParseError(f"{where}: field '{name}' must be {typ.__name__}")
            out[name] = value[name]
    return out


def parse(data: Union[bytes, str]) -> Diagram:
    """Parse document bytes into a validated :class:`Diagram`.

    Vertex ids become labels, in document order.  Raises
    :class:`ParseError` for malformed documents and
    :class:`ValidationError` when the described diagram breaks a diagram
    axiom (non-positive weight or non-square cycle weight product).
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    top = _require_obj(doc, "document",
                       {"format_version": int, "vertices": list, "edges": list}, {})
    if top["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {top['format_version']}")
    ids: list[str] = []
    labels: list[str] = []
    index: dict[str, int] = {}
    for i, v in enumerate(top["vertices"]):
        fields = _require_obj(v, f"vertices[{i}]", {"id": str}, {"label": str})
        vid = fields["id"]
        if vid in index:
            raise ParseError(f"vertices[{i}]: duplicate vertex id '{vid}'")
        index[vid] = len(ids)
        ids.append(vid)
        labels.append(fields.get("label", vid))
    arcs = []
    for i, e in enumerate(top["edges"]):
        fields = _require_obj(e, f"edges[{i}]",
                              {"tail": str, "head": str, "weight": int}, {})
        for end in ("tail", "head"):
            if fields[end] not in index:
                raise ParseError(f"edges[{i}]: unknown vertex id '{fields[end]}'")
        if fields["weight"] <= 0:
            raise ParseError(f"edges[{i}]: weight must be a positive integer")
        arcs.append((index[fields["tail"]], index[fields["head"]], fields["weight"]))
    try:
        d = Diagram(len(ids), arcs, labels)
    except ValueError as e:
        raise ParseError(str(e)) from None
    violations = validate(d)
    if violations:
        raise ValidationError(violations)
    return d


def to_document(d: Diagram) -> dict:
    """Plain-dict form of the document for ``d`` (labels become ids)."""
    ids = list(d.labels)
    if len(set(ids)) != len(ids):
        ids = [f"{i}" for i in range(d.n)]
    vertices = [{"id": ids[i]} for i in range(d.n)]
    edges = [{"tail": ids[t], "head": ids[h], "weight": w}
             for t, h, w in sorted(d.arcs)]
    return {"format_version": FORMAT_VERSION,
            "vertices": sorted(vertices, key=lambda v: v["id"]),
            "edges": sorted(edges, key=lambda e: (e["tail"], e["head"]))}


def serialize(d: Diagram) -> bytes:
    """Deterministic document bytes for ``d``."""
    return (json.dumps(to_document(d), indent=2, sort_keys=True) + "\n").encode()
