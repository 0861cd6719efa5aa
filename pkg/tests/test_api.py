import json

import pytest
from fastapi.testclient import TestClient

from structid.api import create_app
from structid.bundled import get_example


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert "version" in body


def test_examples_listing(client):
    r = client.get("/api/examples")
    assert r.status_code == 200
    examples = r.json()["examples"]
    ids = {e["id"] for e in examples}
    assert {"parent", "one_compartment", "two_compartment"} <= ids
    parent = next(e for e in examples if e["id"] == "parent")
    assert parent["structure"]["n"] == 3
    assert parent["suggested_edits"]


def test_analyze_parent(client):
    r = client.post("/api/analyze", json={"structure": get_example("parent")})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert body["verdict"] == "SU"
    assert body["report"].rstrip().endswith("verdict: SU")


def test_analyze_with_edits(client):
    r = client.post(
        "/api/analyze",
        json={"structure": get_example("parent"), "edits": ["C[1][1]=1"]},
    )
    assert r.status_code == 200
    assert r.json()["verdict"] == "SGI"


def test_missing_structure_rejected(client):
    r = client.post("/api/analyze", json={"edits": []})
    assert r.status_code == 400
    assert "structure" in r.json()["error"]


def test_invalid_json_structure_rejected(client):
    r = client.post("/api/analyze", json={"structure": "nope"})
    assert r.status_code == 400


def test_shape_mismatch_rejected(client):
    doc = dict(get_example("parent"))
    doc = dict(doc, A=[row[:2] for row in doc["A"]])
    r = client.post("/api/analyze", json={"structure": doc})
    assert r.status_code == 400


def test_bad_edit_rejected(client):
    r = client.post(
        "/api/analyze",
        json={"structure": get_example("parent"), "edits": ["C[9][9]=1"]},
    )
    assert r.status_code == 400
    assert "3x3" in r.json()["error"]


def test_bad_field_types_rejected(client):
    base = {"structure": get_example("one_compartment")}
    for overrides in (
        {"edits": "C[1][1]=1"},
        {"edits": [1, 2]},
        {"canonical_form": "yes"},
        {"naming_mode": "shout"},
        {"seeds": ["a"]},
        {"positivity_filter": 1},
        {"symbolic_timeout": "fast"},
    ):
        r = client.post("/api/analyze", json={**base, **overrides})
        assert r.status_code == 400, overrides


def test_non_object_body_rejected(client):
    r = client.post("/api/analyze", json=[1, 2, 3])
    # fastapi rejects the non-dict body before our handler sees it
    assert r.status_code in (400, 422)


def test_layout_hint_echoed(client):
    r = client.post(
        "/api/analyze",
        json={"structure": get_example("one_compartment"), "layout_hint": "grid"},
    )
    assert r.status_code == 200
    assert r.json()["layout_hint"] == "grid"


def test_timeout_capped_by_environment(monkeypatch):
    monkeypatch.setenv("STRUCTID_TIMEOUT_SECONDS", "45")
    client = TestClient(create_app())
    r = client.post(
        "/api/analyze",
        json={"structure": get_example("one_compartment"), "symbolic_timeout": 9999},
    )
    assert r.status_code == 200
    assert r.json()["ok"] is True


def test_concurrent_requests_isolated(client):
    # two different structures in interleaved calls come back unmixed
    r1 = client.post("/api/analyze", json={"structure": get_example("parent")})
    r2 = client.post(
        "/api/analyze", json={"structure": get_example("two_compartment")}
    )
    assert r1.json()["verdict"] == "SU"
    assert r2.json()["verdict"] == "SGI"
