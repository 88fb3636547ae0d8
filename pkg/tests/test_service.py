"""HTTP service surface."""

import json

import pytest
from fastapi.testclient import TestClient

from ringlab.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


SCRIPT = "ring Z2 = zmod(2)\nring Z4 = zmod(4)\nring Z6 = zmod(6)"


def test_root_reports_version(client):
    resp = client.get("/")
    assert resp.status_code == 200
    body = json.loads(resp.text)
    assert body["service"] == "ringlab"


def test_claims_listing(client):
    resp = client.get("/claims")
    ids = [c["id"] for c in json.loads(resp.text)["claims"]]
    assert "P-DAVA" in ids and "X-VARIANT" in ids


def test_analyze_z4(client):
    resp = client.post("/analyze", json={"script": SCRIPT, "ring": "Z4"})
    assert resp.status_code == 200
    report = json.loads(resp.text)
    assert report["properties"]["reduced"]["value"] is False
    assert report["properties"]["pw_product"] == {
        "value": False,
        "variant": "product",
        "witness": [2, 2],
    }


def test_verify_single_claim(client):
    resp = client.post(
        "/verify",
        json={"script": SCRIPT, "ring": "Z6", "claims": ["P-DAVA"], "variant": "both"},
    )
    assert resp.status_code == 200
    report = json.loads(resp.text)
    variants = [c["variant"] for c in report["claims"]]
    assert variants == ["intersection", "product"]
    assert all(c["status"] == "HOLDS" for c in report["claims"])


def test_verify_all_claims(client):
    resp = client.post("/verify", json={"script": SCRIPT, "ring": "Z6", "claims": ["all"]})
    report = json.loads(resp.text)
    assert len(report["claims"]) == 16


def test_corpus_roundtrip_is_byte_identical(client):
    a = client.post("/corpus", json={"claims": ["L-P4", "P-DAVA"]})
    b = client.post("/corpus", json={"claims": ["L-P4", "P-DAVA"]})
    assert a.status_code == 200
    assert a.content == b.content
    report = json.loads(a.text)
    assert report["summary"]["counterexamples"] == 0


def test_error_unknown_ring(client):
    resp = client.post("/analyze", json={"script": SCRIPT, "ring": "Z99"})
    assert resp.status_code == 400
    assert json.loads(resp.text)["error"]["code"] == "UNDEFINED_NAME"


def test_error_syntax(client):
    resp = client.post("/analyze", json={"script": "ring = zmod(2)", "ring": "A"})
    assert resp.status_code == 400
    err = json.loads(resp.text)["error"]
    assert err["code"] == "SYNTAX_ERROR"
    assert err["line"] == 1


def test_error_unknown_claim(client):
    resp = client.post(
        "/verify", json={"script": SCRIPT, "ring": "Z6", "claims": ["NOPE"]}
    )
    assert resp.status_code == 400
    assert json.loads(resp.text)["error"]["code"] == "UNKNOWN_CLAIM"


def test_error_axiom_violation(client):
    bad = "ring K = table { n=2; one=1; add=0, 1, 1, 0; mul=0, 0, 0, 0 }"
    resp = client.post("/analyze", json={"script": bad, "ring": "K"})
    assert resp.status_code == 400
    err = json.loads(resp.text)["error"]
    assert err["code"] == "AXIOM_VIOLATION"
    assert err["axiom"] == "multiplicative-identity"


def test_invalid_body_rejected(client):
    resp = client.post("/analyze", json={"script": SCRIPT})
    assert resp.status_code == 422


def test_spectrum_dot(client):
    resp = client.post("/spectrum", json={"script": SCRIPT, "ring": "Z6"})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("text/vnd.graphviz")
    assert '"{0,3}"' in resp.text


def test_lattice_dot(client):
    resp = client.post("/lattice", json={"script": SCRIPT, "ring": "Z6", "which": "bz"})
    assert resp.status_code == 200
    assert resp.text.count("->") == 4
