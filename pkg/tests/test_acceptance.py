"""Acceptance gate: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the criterion lines
as they execute. Every tolerance is pinned here; nothing is deferred.
"""
from __future__ import annotations

import functools
import json
import shutil
import signal
import socket
import subprocess
import sys
import time
import urllib.request
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from bhadra import (
    build_layers,
    load_taxonomy,
    overlap,
    parse_model,
    techniques_of,
    validate_model,
)
from bhadra.cli import main as cli_main
from bhadra.comparison import comparison_to_doc
from bhadra.service import create_app
from bhadra.taxonomy import (
    Taxonomy,
    bundled_models_dir,
    default_taxonomy_path,
    load_canonical_taxonomy,
    taxonomy_to_doc,
)

REPO_ROOT = Path(__file__).resolve().parent.parent

SIMJACKER_TAGS = {
    "IA.2": "SIM-based attacks",
    "PE.2": "Infecting SIM cards",
    "DI.6": "UE knocking",
    "DI.5": "Internal resource search",
    "LM.1": "Exploit roaming agreements",
    "SP.1": "SS7-based attacks",
    "DE.8": "UE protection evasion",
    "DE.4": "Bypass firewall",
    "CO.3": "User-specific data",
    "CO.2": "User-specific identifiers",
    "IM.1": "Location tracking",
    "IM.8": "Identity-based attacks",
}

MESSAGETAP_TAGS = {
    "IA.7": "Insider attacks and human errors",
    "PE.3": "Infecting network nodes",
    "DI.5": "Internal resource search",
    "LM.3": "Exploit platform and service-specific vulnerabilities",
    "DE.1": "Security audit camouflage",
    "CO.3": "User-specific data",
    "CO.2": "User-specific identifiers",
    "IM.3": "SMS interception",
    "IM.8": "Identity-based attacks",
}


def criterion(number: int, summary: str):
    def wrap(fn):
        @functools.wraps(fn)
        def runner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"\nFAIL criterion {number}: {summary}")
                raise
            print(f"\nPASS criterion {number}: {summary}")
        return runner
    return wrap


@criterion(1, "canonical taxonomy loads with exact cardinalities in < 1 s")
def test_criterion_1_taxonomy_cardinality():
    started = time.perf_counter()
    taxonomy = load_taxonomy(default_taxonomy_path())
    elapsed = time.perf_counter() - started
    assert isinstance(taxonomy, Taxonomy), "canonical file must load cleanly"
    assert elapsed < 1.0, f"load took {elapsed:.3f}s"

    assert len(taxonomy.tactics) == 8
    assert len(taxonomy.techniques) == 47
    per_phase = {"Mounting": 0, "Execution": 0, "Results": 0}
    for tactic in taxonomy.tactics:
        per_phase[tactic.phase.value] += 1
    assert per_phase == {"Mounting": 3, "Execution": 3, "Results": 2}
    counts = {
        tactic.id: len(techniques_of(taxonomy, tactic.id))
        for tactic in taxonomy.tactics
    }
    assert counts == {"IA": 7, "PE": 5, "DI": 6, "LM": 3,
                      "SP": 5, "DE": 8, "CO": 5, "IM": 8}


@criterion(2, "Simjacker fixture: zero Errors, exactly the 12 documented tags")
def test_criterion_2_simjacker():
    taxonomy = load_canonical_taxonomy()
    model = parse_model(bundled_models_dir() / "simjacker.json")
    report = validate_model(model, taxonomy)
    assert report.errors == ()
    assert model.technique_ids() == set(SIMJACKER_TAGS)
    by_id = {t.id: t.name for t in taxonomy.techniques}
    for tid, name in SIMJACKER_TAGS.items():
        assert by_id[tid] == name, f"{tid} should be named {name!r}"


@criterion(3, "MESSAGETAP fixture: zero Errors, one SP warning, 9 tags")
def test_criterion_3_messagetap():
    taxonomy = load_canonical_taxonomy()
    model = parse_model(bundled_models_dir() / "messagetap.json")
    report = validate_model(model, taxonomy)
    assert report.errors == ()
    assert len(report.warnings) == 1
    assert report.warnings[0].subject == "SP"
    assert len(model.tags) == 9
    assert model.technique_ids() == set(MESSAGETAP_TAGS)
    by_id = {t.id: t.name for t in taxonomy.techniques}
    for tid, name in MESSAGETAP_TAGS.items():
        assert by_id[tid] == name, f"{tid} should be named {name!r}"


@criterion(4, "billing-fraud comparison: shared IM.5, exclusive SP cells, "
              "byte-identical layers")
def test_criterion_4_billing_comparison():
    taxonomy = load_canonical_taxonomy()

    def run_once() -> tuple[dict, bytes]:
        models = [
            parse_model(bundled_models_dir() / f"billing-{i}.json")
            for i in (1, 2, 3)
        ]
        matrix = overlap(models)
        palette = ["#e41a1c", "#377eb8", "#4daf4a", "#999999"]
        layers = build_layers(models, palette, taxonomy)
        doc = comparison_to_doc(matrix, layers, taxonomy.version)
        return doc, json.dumps(doc, sort_keys=True).encode()

    doc, first_bytes = run_once()
    tag_sets = [
        parse_model(bundled_models_dir() / f"billing-{i}.json").technique_ids()
        for i in (1, 2, 3)
    ]
    assert tag_sets[0] & tag_sets[1] & tag_sets[2] >= {"IM.5"}
    assert doc["cells"]["SP.4"] == ["billing-1"]
    assert doc["cells"]["SP.3"] == ["billing-3"]

    _, second_bytes = run_once()
    assert first_bytes == second_bytes, "layer output must be byte-identical"


@criterion(5, "property suites (1000 cases each) pass in < 30 s")
def test_criterion_5_property_suites():
    started = time.perf_counter()
    result = subprocess.run(
        [sys.executable, "-m", "pytest", str(REPO_ROOT / "tests" / "test_properties.py"),
         "-q", "--no-header", "-p", "no:cacheprovider"],
        capture_output=True, text=True, cwd=REPO_ROOT,
    )
    elapsed = time.perf_counter() - started
    assert result.returncode == 0, result.stdout + result.stderr
    assert "7 passed" in result.stdout, result.stdout
    assert elapsed < 30.0, f"property suites took {elapsed:.1f}s"


@criterion(6, "HTTP contract: CRUD, 409 on stale write, 422 with findings, "
              "taxonomy passthrough")
def test_criterion_6_http_contract(tmp_path):
    root = tmp_path / "repo"
    root.mkdir()
    for path in bundled_models_dir().glob("*.json"):
        shutil.copy(path, root / path.name)
    app = create_app(default_taxonomy_path(), root)

    with TestClient(app) as client:
        # taxonomy passthrough: equal to the canonical file modulo formatting
        served = client.get("/api/v1/taxonomy")
        assert served.status_code == 200
        assert served.json() == json.loads(
            default_taxonomy_path().read_text(encoding="utf-8")
        )

        # create
        doc = client.get("/api/v1/attacks/simjacker").json()
        doc["id"] = "crud-model"
        doc["title"] = "CRUD cycle"
        assert client.put("/api/v1/attacks/crud-model", json=doc).status_code == 200

        # read
        stored = client.get("/api/v1/attacks/crud-model")
        assert stored.status_code == 200

        # update honoring the precondition
        update = stored.json()
        update["summary"] = "updated"
        update["expected_modified"] = update["modified"]
        update["modified"] = "2026-08-09T10:00:00.000000Z"
        assert client.put("/api/v1/attacks/crud-model", json=update).status_code == 200

        # stale precondition -> 409, exact
        stale = client.get("/api/v1/attacks/crud-model").json()
        stale["expected_modified"] = "1999-01-01T00:00:00Z"
        response = client.put("/api/v1/attacks/crud-model", json=stale)
        assert response.status_code == 409

        # invalid Final model -> 422 with findings
        bad = {
            "id": "bad-final", "title": "Bad", "status": "Final",
            "taxonomy_version": "1.0.0",
            "tags": [{"technique": "IM.5", "evidence": "impact only"}],
        }
        response = client.put("/api/v1/attacks/bad-final", json=bad)
        assert response.status_code == 422
        assert any(
            f["code"] == "MISSING_INITIAL_ACCESS"
            for f in response.json()["findings"]
        )

        # delete
        assert client.delete("/api/v1/attacks/crud-model").status_code == 204
        assert client.get("/api/v1/attacks/crud-model").status_code == 404
        assert client.delete("/api/v1/attacks/crud-model").status_code == 404


@criterion(7, "CLI triage 0/1/2 holds for every command")
def test_criterion_7_cli_triage(tmp_path):
    runner = CliRunner()
    taxonomy_path = default_taxonomy_path()
    models_dir = bundled_models_dir()

    repo = tmp_path / "repo"
    repo.mkdir()
    for path in models_dir.glob("*.json"):
        shutil.copy(path, repo / path.name)
    empty = tmp_path / "empty"
    empty.mkdir()

    broken_taxonomy = tmp_path / "broken-taxonomy.json"
    doc = taxonomy_to_doc(load_canonical_taxonomy())
    doc["techniques"].append({"id": "IA.8", "name": "Extra", "tactic": "IA"})
    broken_taxonomy.write_text(json.dumps(doc), encoding="utf-8")

    invalid_model = tmp_path / "invalid-model.json"
    invalid_model.write_text(json.dumps({
        "id": "x", "title": "X", "status": "Final", "taxonomy_version": "1.0.0",
        "tags": [{"technique": "IM.5", "evidence": "impact only"}],
    }), encoding="utf-8")

    garbage = tmp_path / "garbage.json"
    garbage.write_text("{nope", encoding="utf-8")

    draft = tmp_path / "draft.json"
    assert runner.invoke(cli_main, ["model-new", "Draft", "-o", str(draft)]).exit_code == 0

    layers_json = tmp_path / "layers.json"
    compare_out = runner.invoke(cli_main, [
        "compare", "billing-1", "billing-2", "--repo", str(repo), "--format=json",
    ])
    assert compare_out.exit_code == 0
    layers_json.write_text(compare_out.output, encoding="utf-8")

    alien = tmp_path / "alien.json"
    alien.write_text(json.dumps({
        "id": "alien", "title": "Alien", "taxonomy_version": "0.0.1",
        "tags": [{"technique": "IA.1", "evidence": "x"}],
    }), encoding="utf-8")

    cases = {
        "taxonomy-validate": [
            (["taxonomy-validate", str(taxonomy_path)], 0),
            (["taxonomy-validate", str(broken_taxonomy)], 1),
            (["taxonomy-validate", str(tmp_path / "missing.json")], 2),
        ],
        "model-validate": [
            (["model-validate", str(models_dir / "simjacker.json")], 0),
            (["model-validate", str(invalid_model)], 1),
            (["model-validate", "--bogus-flag"], 2),
        ],
        "model-new": [
            (["model-new", "Fresh", "-o", str(tmp_path / "fresh.json")], 0),
            (["model-new", "Hollow", "--final", "-o", str(tmp_path / "h.json")], 1),
            (["model-new", "Nowhere"], 2),
        ],
        "model-tag": [
            (["model-tag", str(draft), "IA.1", "--evidence", "entry"], 0),
            (["model-tag", str(draft), "QQ.9"], 1),
            (["model-tag", str(tmp_path / "missing.json"), "IA.1"], 2),
        ],
        "compare": [
            (["compare", "billing-1", "billing-2", "--repo", str(repo)], 0),
            (["compare", "billing-1", str(alien), "--repo", str(repo)], 1),
            (["compare", "billing-1", "--repo", str(repo)], 2),
        ],
        "stats": [
            (["stats", "--repo", str(repo)], 0),
            (["stats", "--repo", str(repo), "--taxonomy", str(broken_taxonomy)], 1),
            (["stats", "--repo", str(empty)], 2),
        ],
        "render": [
            (["render", str(layers_json), "--to", "csv"], 0),
            (["render", str(garbage), "--to", "csv"], 1),
            (["render", str(layers_json), "--to", "pdf"], 2),
        ],
        "serve": [
            (["serve", "--repo", str(repo), "--taxonomy", str(broken_taxonomy)], 1),
            (["serve"], 2),
        ],
    }

    for command, rows in cases.items():
        for args, expected in rows:
            result = runner.invoke(cli_main, args, env={
                "BHADRA_REPO": "", "BHADRA_TAXONOMY": "",
            })
            assert result.exit_code == expected, (
                f"{command}: {' '.join(args)} -> exit {result.exit_code}, "
                f"expected {expected}\n{result.output}"
            )

    # serve success path: boot a real server, confirm it answers, stop it
    port = _free_port()
    proc = subprocess.Popen(
        [sys.executable, "-m", "bhadra.cli", "serve",
         "--repo", str(repo), "--port", str(port)],
        stdout=subprocess.PIPE, stderr=subprocess.STDOUT,
    )
    try:
        assert _wait_for_http(f"http://127.0.0.1:{port}/api/v1/stats", 20.0)
    finally:
        proc.send_signal(signal.SIGINT)
        assert proc.wait(timeout=20) == 0


FRONTEND_DIR = REPO_ROOT / "frontend"


@pytest.mark.skipif(
    not (FRONTEND_DIR / "node_modules" / ".bin" / "vitest").exists(),
    reason="frontend toolchain not installed (npm install in frontend/)",
)
@criterion(8, "navigator renders/persists/compares against a live service")
def test_criterion_8_navigator():
    result = subprocess.run(
        [str(FRONTEND_DIR / "node_modules" / ".bin" / "vitest"), "run"],
        capture_output=True, text=True, cwd=FRONTEND_DIR, timeout=300,
    )
    assert result.returncode == 0, result.stdout + result.stderr


def _free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def _wait_for_http(url: str, timeout: float) -> bool:
    deadline = time.time() + timeout
    while time.time() < deadline:
        try:
            with urllib.request.urlopen(url, timeout=1) as response:
                if response.status == 200:
                    return True
        except Exception:
            time.sleep(0.2)
    return False


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
