"""Document format: strict parsing, determinism, round-trips."""
import json

import pytest

from diagmut import io
from diagmut.diagram import Diagram
from diagmut.canon import canonical_key


def doc(vertices, edges, version=1, **extra):
    d = {"format_version": version, "vertices": vertices, "edges": edges}
    d.update(extra)
    return json.dumps(d)


def test_parse_simple_weighted_edge():
    d = io.parse(doc([{"id": "0"}, {"id": "1"}],
                     [{"tail": "0", "head": "1", "weight": 2}]))
    assert d.n == 2 and d.arcs == ((0, 1, 2),)


def test_parse_rejects_missing_version():
    with pytest.raises(io.ParseError):
        io.parse(json.dumps({"vertices": [], "edges": []}))


def test_parse_rejects_unknown_fields():
    with pytest.raises(io.ParseError):
        io.parse(doc([], [], junk=1))
    with pytest.raises(io.ParseError):
        io.parse(doc([{"id": "0", "color": "red"}], []))
    with pytest.raises(io.ParseError):
        io.parse(doc([{"id": "0"}, {"id": "1"}],
                     [{"tail": "0", "head": "1", "weight": 1, "style": "x"}]))


def test_parse_rejects_duplicate_id_and_bad_reference():
    with pytest.raises(io.ParseError):
        io.parse(doc([{"id": "a"}, {"id": "a"}], []))
    with pytest.raises(io.ParseError):
        io.parse(doc([{"id": "a"}], [{"tail": "a", "head": "b", "weight": 1}]))


def test_parse_rejects_bad_weight_and_version():
    with pytest.raises(io.ParseError):
        io.parse(doc([{"id": "a"}, {"id": "b"}],
                     [{"tail": "a", "head": "b", "weight": 0}]))
    with pytest.raises(io.ParseError):
        io.parse(doc([], [], version=2))


def test_parse_validation_error_for_non_square_cycle():
    with pytest.raises(io.ValidationError) as exc:
        io.parse(doc([{"id": "a"}, {"id": "b"}, {"id": "c"}],
                     [{"tail": "a", "head": "b", "weight": 2},
                      {"tail": "b", "head": "c", "weight": 1},
                      {"tail": "c", "head": "a", "weight": 1}]))
    assert any(v.code == "non-square-cycle" for v in exc.value.violations)


def test_serialize_deterministic_and_round_trips():
    d = Diagram(4, [(2, 0, 1), (0, 1, 2), (3, 2, 1)])
    data = io.serialize(d)
    assert data == io.serialize(d)
    back = io.parse(data)
    assert canonical_key(back) == canonical_key(d)
    assert sorted(back.labels) == sorted(d.labels)
    assert io.serialize(back) == data
