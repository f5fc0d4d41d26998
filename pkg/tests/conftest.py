"""Shared fixtures: the canonical taxonomy, bundled models, scratch repos."""
from __future__ import annotations

import shutil

import pytest

from bhadra import (
    load_canonical_taxonomy,
    open_repository,
    parse_model,
)
from bhadra.taxonomy import bundled_models_dir, default_taxonomy_path

BUNDLED_IDS = ["billing-1", "billing-2", "billing-3", "messagetap", "simjacker"]


@pytest.fixture(scope="session")
def taxonomy():
    return load_canonical_taxonomy()


@pytest.fixture(scope="session")
def canonical_path():
    return default_taxonomy_path()


@pytest.fixture(scope="session")
def bundled_models():
    return {
        model_id: parse_model(bundled_models_dir() / f"{model_id}.json")
        for model_id in BUNDLED_IDS
    }


@pytest.fixture
def simjacker(bundled_models):
    return bundled_models["simjacker"]


@pytest.fixture
def messagetap(bundled_models):
    return bundled_models["messagetap"]


@pytest.fixture
def billing_models(bundled_models):
    return [bundled_models[f"billing-{i}"] for i in (1, 2, 3)]


@pytest.fixture
def scratch_repo(tmp_path, taxonomy):
    """An empty writable repository."""
    root = tmp_path / "repo"
    root.mkdir()
    return open_repository(root, taxonomy)


@pytest.fixture
def seeded_repo(tmp_path, taxonomy):
    """A writable repository preloaded with the five bundled models."""
    root = tmp_path / "corpus"
    root.mkdir()
    for path in bundled_models_dir().glob("*.json"):
        shutil.copy(path, root / path.name)
    return open_repository(root, taxonomy)
