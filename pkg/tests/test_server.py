"""HTTP service endpoints."""
import pytest
from fastapi.testclient import TestClient

from diagmut import io
from diagmut.seeds import dynkin_seed
from diagmut.server import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def _doc(t, rank):
    return io.to_document(dynkin_seed(t, rank))


def test_health(client):
    res = client.get("/v1/health")
    assert res.status_code == 200 and res.json() == {"status": "ok"}


def test_classify(client):
    res = client.post("/v1/classify", json={"diagram": _doc("A", 3)})
    assert res.status_code == 200
    body = res.json()
    assert body["type"] == "A" and body["rank"] == 3


def test_mutate_round_trip(client):
    doc = _doc("B", 2)
    res = client.post("/v1/mutate", json={"diagram": doc, "vertex": "0"})
    assert res.status_code == 200
    once = res.json()["diagram"]
    assert once != doc
    res = client.post("/v1/mutate", json={"diagram": once, "vertex": "0"})
    assert res.json()["diagram"] == doc


def test_mutate_unknown_vertex_422(client):
    res = client.post("/v1/mutate", json={"diagram": _doc("A", 2),
                                          "vertex": "zz"})
    assert res.status_code == 422


def test_parse_error_400(client):
    bad = {"format_version": 1, "vertices": [], "edges": [], "zz": 0}
    res = client.post("/v1/classify", json={"diagram": bad})
    assert res.status_code == 400


def test_validate_reports_violations(client):
    tri = {"format_version": 1,
           "vertices": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
           "edges": [{"tail": "a", "head": "b", "weight": 2},
                     {"tail": "b", "head": "c", "weight": 1},
                     {"tail": "c", "head": "a", "weight": 1}]}
    res = client.post("/v1/validate", json={"diagram": tri})
    assert res.status_code == 200
    assert any(v["code"] == "non-square-cycle"
               for v in res.json()["violations"])
    ok = client.post("/v1/validate", json={"diagram": _doc("A", 2)})
    assert ok.json() == {"violations": []}


def test_orbit_census_and_limit(client):
    res = client.post("/v1/orbit", json={"diagram": _doc("A", 3)})
    assert res.status_code == 200
    assert res.json()["size"] == 4 and res.json()["census"] == {"A": 4}
    res = client.post("/v1/orbit", json={"diagram": _doc("A", 5),
                                         "max_members": 3})
    assert res.status_code == 503


def test_responses_are_pure_functions_of_requests(client):
    doc = _doc("D", 4)
    first = client.post("/v1/classify", json={"diagram": doc}).json()
    for _ in range(3):
        assert client.post("/v1/classify",
                           json={"diagram": doc}).json() == first
