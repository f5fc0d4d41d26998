import json
import shutil

import pytest
from fastapi.testclient import TestClient

from bhadra.service import create_app
from bhadra.taxonomy import bundled_models_dir, default_taxonomy_path


@pytest.fixture
def client(tmp_path):
    root = tmp_path / "repo"
    root.mkdir()
    for path in bundled_models_dir().glob("*.json"):
        shutil.copy(path, root / path.name)
    app = create_app(default_taxonomy_path(), root)
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def empty_client(tmp_path):
    root = tmp_path / "empty"
    root.mkdir()
    app = create_app(default_taxonomy_path(), root)
    with TestClient(app) as test_client:
        yield test_client


def _fresh_doc(client, model_id="api-born"):
    doc = client.get("/api/v1/attacks/simjacker").json()
    doc["id"] = model_id
    doc["title"] = "Born over the API"
    return doc


def test_get_taxonomy_matches_canonical_file(client):
    response = client.get("/api/v1/taxonomy")
    assert response.status_code == 200
    served = response.json()
    on_disk = json.loads(default_taxonomy_path().read_text(encoding="utf-8"))
    assert served == on_disk


def test_list_attacks(client):
    body = client.get("/api/v1/attacks").json()
    assert body["count"] == 5
    assert {m["id"] for m in body["models"]} == {
        "simjacker", "messagetap", "billing-1", "billing-2", "billing-3",
    }


def test_list_attacks_filters(client):
    body = client.get("/api/v1/attacks", params={"technique": "IM.5"}).json()
    assert {m["id"] for m in body["models"]} == {
        "billing-1", "billing-2", "billing-3",
    }
    body = client.get(
        "/api/v1/attacks", params={"adversary": "HumanInsider"}
    ).json()
    assert "messagetap" in [m["id"] for m in body["models"]]


def test_list_attacks_bad_filter(client):
    response = client.get("/api/v1/attacks", params={"technique": "ZZ.9"})
    assert response.status_code == 400
    body = response.json()
    assert body["code"] == "UNKNOWN_ID"
    assert "message" in body


def test_get_attack(client):
    response = client.get("/api/v1/attacks/simjacker")
    assert response.status_code == 200
    assert len(response.json()["tags"]) == 12


def test_get_missing_attack_404(client):
    response = client.get("/api/v1/attacks/ghost")
    assert response.status_code == 404
    assert response.json()["code"] == "NOT_FOUND"


def test_put_creates_and_gets_back(client):
    doc = _fresh_doc(client)
    response = client.put("/api/v1/attacks/api-born", json=doc)
    assert response.status_code == 200
    fetched = client.get("/api/v1/attacks/api-born")
    assert fetched.status_code == 200
    assert fetched.json() == response.json()


def test_put_stale_timestamp_409(client):
    doc = client.get("/api/v1/attacks/billing-1").json()
    doc["expected_modified"] = "1999-01-01T00:00:00Z"
    response = client.put("/api/v1/attacks/billing-1", json=doc)
    assert response.status_code == 409
    assert response.json()["code"] == "CONFLICT"


def test_put_fresh_timestamp_200(client):
    doc = client.get("/api/v1/attacks/billing-1").json()
    stored_modified = doc["modified"]
    doc["summary"] = "edited over the API"
    doc["modified"] = "2026-08-09T00:00:00.000000Z"
    doc["expected_modified"] = stored_modified
    response = client.put("/api/v1/attacks/billing-1", json=doc)
    assert response.status_code == 200
    assert client.get("/api/v1/attacks/billing-1").json()["summary"] == (
        "edited over the API"
    )


def test_put_invalid_final_422_with_findings(client):
    doc = {
        "id": "broken", "title": "Broken", "status": "Final",
        "taxonomy_version": "1.0.0",
        "tags": [{"technique": "IM.5", "evidence": "only impact"}],
    }
    response = client.put("/api/v1/attacks/broken", json=doc)
    assert response.status_code == 422
    body = response.json()
    assert body["code"] == "VALIDATION_FAILED"
    codes = {f["code"] for f in body["findings"]}
    assert "MISSING_INITIAL_ACCESS" in codes


def test_put_id_mismatch_400(client):
    doc = _fresh_doc(client, model_id="other-id")
    response = client.put("/api/v1/attacks/api-born", json=doc)
    assert response.status_code == 400


def test_put_garbage_body_400(client):
    response = client.put(
        "/api/v1/attacks/x", content=b"{nope", headers={"content-type": "application/json"}
    )
    assert response.status_code == 400
    assert response.json()["code"] == "PARSE_ERROR"


def test_delete_then_404(client):
    assert client.delete("/api/v1/attacks/billing-2").status_code == 204
    assert client.get("/api/v1/attacks/billing-2").status_code == 404
    assert client.delete("/api/v1/attacks/billing-2").status_code == 404


def test_compare_billing_models(client):
    response = client.post(
        "/api/v1/compare",
        json={"ids": ["billing-1", "billing-2", "billing-3"],
              "palette": ["#e41a1c", "#377eb8", "#4daf4a", "#999999"]},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["cells"]["IM.5"] == ["billing-1", "billing-2", "billing-3"]
    layer = next(l for l in body["layers"] if l["technique"] == "IM.5")
    assert layer["color"] == "#999999"


def test_compare_needs_two_ids(client):
    response = client.post("/api/v1/compare", json={"ids": ["simjacker"]})
    assert response.status_code == 400


def test_compare_unknown_id_404(client):
    response = client.post(
        "/api/v1/compare", json={"ids": ["simjacker", "ghost"]}
    )
    assert response.status_code == 404


def test_stats_document(client):
    body = client.get("/api/v1/stats").json()
    assert body["corpus_size"] == 5
    assert body["frequency"]["IM.8"] == 3
    assert len(body["grid"]) == 47
    buckets = {cell["technique"]: cell["bucket"] for cell in body["grid"]}
    assert buckets["IM.5"] == 3


def test_stats_on_empty_repo(empty_client):
    body = empty_client.get("/api/v1/stats").json()
    assert body["corpus_size"] == 0
    assert body["frequency"] == {}
    assert len(body["grid"]) == 47
    assert all(cell["bucket"] == 0 for cell in body["grid"])


def test_full_crud_cycle(client):
    doc = _fresh_doc(client, model_id="lifecycle")
    created = client.put("/api/v1/attacks/lifecycle", json=doc)
    assert created.status_code == 200

    stored = client.get("/api/v1/attacks/lifecycle").json()
    stored["summary"] = "updated"
    stored["expected_modified"] = stored["modified"]
    stored["modified"] = "2026-08-09T09:00:00.000000Z"
    updated = client.put("/api/v1/attacks/lifecycle", json=stored)
    assert updated.status_code == 200
    assert updated.json()["summary"] == "updated"

    assert client.delete("/api/v1/attacks/lifecycle").status_code == 204
    assert client.get("/api/v1/attacks/lifecycle").status_code == 404
