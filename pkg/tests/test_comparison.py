import json
from dataclasses import replace

import pytest

from bhadra import (
    TechniqueTag,
    VersionMismatchError,
    build_layers,
    diff,
    new_model,
    overlap,
    similarity,
    tag_technique,
)
from bhadra.comparison import comparison_from_doc, comparison_to_doc

# Frozen regression value, computed by brute-force set arithmetic over the
# two bundled fixtures: |intersection| = 4 (DI.5, CO.2, CO.3, IM.8),
# |union| = 17.
SIMJACKER_MESSAGETAP_SIMILARITY = 4 / 17


def _mini(taxonomy, model_id, technique_ids):
    model = new_model(model_id, set(), taxonomy, model_id=model_id)
    for tid in technique_ids:
        model = tag_technique(model, TechniqueTag(tid, "e"), taxonomy)
    return model


def test_overlap_billing_fixtures(billing_models):
    matrix = overlap(billing_models)
    assert matrix.cells["IM.5"] == {"billing-1", "billing-2", "billing-3"}
    assert matrix.cells["SP.4"] == {"billing-1"}
    assert matrix.cells["SP.3"] == {"billing-3"}


def test_overlap_identical_models(simjacker, taxonomy):
    twin = replace(simjacker, id="simjacker-copy")
    matrix = overlap([simjacker, twin])
    for members in matrix.cells.values():
        assert members == {"simjacker", "simjacker-copy"}


def test_overlap_requires_two_models(simjacker):
    with pytest.raises(ValueError):
        overlap([simjacker])


def test_overlap_rejects_mixed_versions(simjacker, messagetap):
    other = replace(messagetap, taxonomy_version="0.9.0")
    with pytest.raises(VersionMismatchError):
        overlap([simjacker, other])


def test_overlap_rejects_duplicate_ids(simjacker):
    with pytest.raises(ValueError):
        overlap([simjacker, simjacker])


def test_overlap_conserves_tag_counts(billing_models):
    matrix = overlap(billing_models)
    assert sum(len(m) for m in matrix.cells.values()) == sum(
        len(m.technique_ids()) for m in billing_models
    )


def test_similarity_fixed_points(simjacker, messagetap, taxonomy):
    assert similarity(simjacker, simjacker) == 1.0
    a = _mini(taxonomy, "a", ["IA.1"])
    b = _mini(taxonomy, "b", ["IM.5"])
    assert similarity(a, b) == 0.0
    assert similarity(simjacker, messagetap) == SIMJACKER_MESSAGETAP_SIMILARITY


def test_similarity_symmetric(simjacker, messagetap):
    assert similarity(simjacker, messagetap) == similarity(messagetap, simjacker)


def test_similarity_undefined_for_two_empty(taxonomy):
    a = new_model("a", set(), taxonomy, model_id="a")
    b = new_model("b", set(), taxonomy, model_id="b")
    with pytest.raises(ValueError):
        similarity(a, b)


def test_diff_partitions_union(simjacker, messagetap):
    result = diff(simjacker, messagetap)
    union = simjacker.technique_ids() | messagetap.technique_ids()
    assert result.only_a | result.only_b | result.common == union
    assert not result.only_a & result.only_b
    assert not result.only_a & result.common
    assert result.common == simjacker.technique_ids() & messagetap.technique_ids()


def test_diff_self_is_all_common(simjacker):
    result = diff(simjacker, simjacker)
    assert result.only_a == result.only_b == frozenset()
    assert result.common == simjacker.technique_ids()


def test_diff_mirrors(simjacker, messagetap):
    ab = diff(simjacker, messagetap)
    ba = diff(messagetap, simjacker)
    assert ab.only_a == ba.only_b
    assert ab.only_b == ba.only_a
    assert ab.common == ba.common


def test_diff_billing_2_3_share_billing_frauds(billing_models):
    result = diff(billing_models[1], billing_models[2])
    assert "IM.5" in result.common


def test_layers_overlap_color(billing_models, taxonomy):
    palette = ["#e41a1c", "#377eb8", "#4daf4a", "#999999"]
    layers = build_layers(billing_models, palette, taxonomy)
    by_technique = {layer.technique: layer for layer in layers}
    assert by_technique["IM.5"].color == "#999999"
    assert by_technique["SP.4"].color == "#e41a1c"   # billing-1's own color
    assert by_technique["SP.3"].color == "#4daf4a"   # billing-3's own color


def test_layers_sorted_by_matrix_position(billing_models, taxonomy):
    palette = ["#e41a1c", "#377eb8", "#4daf4a", "#999999"]
    layers = build_layers(billing_models, palette, taxonomy)
    positions = [
        (taxonomy.tactic_by_id(l.technique.split(".")[0]).ordinal,
         int(l.technique.split(".")[1]))
        for l in layers
    ]
    assert positions == sorted(positions)


def test_layers_deterministic(billing_models, taxonomy):
    palette = ["#e41a1c", "#377eb8", "#4daf4a", "#999999"]
    a = build_layers(billing_models, palette, taxonomy)
    b = build_layers(billing_models, palette, taxonomy)
    assert a == b
    doc_a = comparison_to_doc(overlap(billing_models), a, "1.0.0")
    doc_b = comparison_to_doc(overlap(billing_models), b, "1.0.0")
    assert json.dumps(doc_a) == json.dumps(doc_b)


def test_layers_palette_too_short(billing_models, taxonomy):
    with pytest.raises(ValueError):
        build_layers(billing_models, ["#111111", "#222222", "#333333"], taxonomy)


def test_layers_no_overlap_needs_no_extra_color(taxonomy):
    a = _mini(taxonomy, "a", ["IA.1"])
    b = _mini(taxonomy, "b", ["IM.5"])
    layers = build_layers([a, b], ["#111111", "#222222"], taxonomy)
    assert {l.technique: l.color for l in layers} == {
        "IA.1": "#111111", "IM.5": "#222222",
    }


def test_membership_invariant_under_permutation(billing_models, taxonomy):
    forward = overlap(billing_models)
    backward = overlap(list(reversed(billing_models)))
    assert forward.cells == backward.cells


def test_comparison_doc_roundtrip(billing_models, taxonomy):
    palette = ["#e41a1c", "#377eb8", "#4daf4a", "#999999"]
    matrix = overlap(billing_models)
    layers = build_layers(billing_models, palette, taxonomy)
    doc = comparison_to_doc(matrix, layers, "1.0.0")
    matrix2, layers2 = comparison_from_doc(json.loads(json.dumps(doc)))
    assert matrix2 == matrix
    assert layers2 == layers
