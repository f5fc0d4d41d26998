import pytest

from bhadra import (
    Phase,
    TechniqueTag,
    VersionMismatchError,
    heatmap_grid,
    new_model,
    phase_coverage,
    severity_score,
    tag_technique,
    technique_frequency,
)
from bhadra.analytics import shade_bucket, stats_from_doc, stats_to_doc


@pytest.fixture
def corpus(bundled_models):
    return list(bundled_models.values())


def test_frequency_over_bundled_corpus(corpus, taxonomy):
    stats = technique_frequency(corpus, taxonomy)
    assert stats.corpus_size == 5
    # frozen by independent recount over the fixture files
    assert stats.frequency["IM.8"] == 3   # simjacker, messagetap, billing-2
    assert stats.frequency["IM.5"] == 3   # the three billing attacks
    assert stats.frequency["DI.5"] == 2   # simjacker, messagetap
    assert stats.frequency["SP.4"] == 1   # billing-1 only


def test_frequency_counts_models_not_tags(taxonomy):
    model = new_model("single", set(), taxonomy, model_id="single")
    model = tag_technique(model, TechniqueTag("IA.1", "x"), taxonomy)
    model = tag_technique(model, TechniqueTag("IM.5", "y"), taxonomy)
    other = new_model("other", set(), taxonomy, model_id="other")
    other = tag_technique(other, TechniqueTag("IA.1", "z"), taxonomy)
    stats = technique_frequency([model, other], taxonomy)
    assert stats.frequency == {"IA.1": 2, "IM.5": 1}


def test_frequency_conservation(corpus, taxonomy):
    stats = technique_frequency(corpus, taxonomy)
    assert sum(stats.frequency.values()) == sum(
        len(m.technique_ids()) for m in corpus
    )


def test_frequency_unused_partition(corpus, taxonomy):
    stats = technique_frequency(corpus, taxonomy)
    used = set(stats.frequency)
    assert used.isdisjoint(stats.unused)
    assert used | stats.unused == set(taxonomy.technique_ids())


def test_frequency_rejects_empty_corpus(taxonomy):
    with pytest.raises(ValueError):
        technique_frequency([], taxonomy)


def test_frequency_monotone_under_corpus_growth(corpus, taxonomy):
    before = technique_frequency(corpus[:3], taxonomy)
    after = technique_frequency(corpus, taxonomy)
    for technique_id, count in before.frequency.items():
        assert after.frequency[technique_id] >= count


def test_frequency_rejects_mixed_versions(corpus, taxonomy):
    from dataclasses import replace

    other = replace(corpus[0], id="alien", taxonomy_version="0.1.0")
    with pytest.raises(VersionMismatchError):
        technique_frequency(corpus + [other], taxonomy)


def test_phase_coverage_simjacker(simjacker, taxonomy):
    coverage = phase_coverage(simjacker, taxonomy)
    assert (coverage[Phase.MOUNTING].tagged_tactics,
            coverage[Phase.MOUNTING].total_tactics) == (3, 3)
    assert (coverage[Phase.EXECUTION].tagged_tactics,
            coverage[Phase.EXECUTION].total_tactics) == (3, 3)
    assert (coverage[Phase.RESULTS].tagged_tactics,
            coverage[Phase.RESULTS].total_tactics) == (2, 2)


def test_phase_coverage_messagetap_skips_sp(messagetap, taxonomy):
    coverage = phase_coverage(messagetap, taxonomy)
    assert coverage[Phase.EXECUTION].tagged_tactics == 2


def test_phase_coverage_empty_model(taxonomy):
    model = new_model("empty", set(), taxonomy)
    coverage = phase_coverage(model, taxonomy)
    assert all(c.tagged_tactics == 0 for c in coverage.values())
    assert [coverage[p].total_tactics for p in Phase] == [3, 3, 2]


def test_severity_score_uniform(simjacker):
    severities = {tid: 2 for tid in simjacker.technique_ids()}
    assert severity_score(simjacker, severities) == 24  # 12 tags x 2


def test_severity_score_counts_tags_at_one(messagetap):
    severities = {tid: 1 for tid in messagetap.technique_ids()}
    assert severity_score(messagetap, severities) == len(messagetap.tags)


def test_severity_score_empty_model(taxonomy):
    model = new_model("empty", set(), taxonomy)
    assert severity_score(model, {}) == 0


def test_severity_score_requires_coverage(simjacker):
    severities = {tid: 2 for tid in simjacker.technique_ids()}
    severities.pop("IM.8")
    with pytest.raises(ValueError) as exc:
        severity_score(simjacker, severities)
    assert "IM.8" in str(exc.value)


def test_shade_bucket_formula():
    assert shade_bucket(0, 5) == 0
    assert shade_bucket(5, 5) == 4
    assert shade_bucket(3, 5) == 3   # ceil(12/5)
    assert shade_bucket(1, 5) == 1   # ceil(4/5)
    assert shade_bucket(2, 8) == 1   # ceil(8/8)
    assert shade_bucket(7, 8) == 4   # ceil(28/8)


def test_heatmap_emits_all_47_cells(corpus, taxonomy):
    stats = technique_frequency(corpus, taxonomy)
    grid = heatmap_grid(stats, taxonomy)
    assert len(grid) == 47
    assert {cell.technique for cell in grid} == set(taxonomy.technique_ids())
    by_id = {cell.technique: cell for cell in grid}
    assert by_id["IM.5"].count == 3 and by_id["IM.5"].bucket == 3
    assert by_id["PE.1"].count == 0 and by_id["PE.1"].bucket == 0


def test_heatmap_version_check(corpus, taxonomy):
    from dataclasses import replace

    stats = replace(
        technique_frequency(corpus, taxonomy), taxonomy_version="0.0.9"
    )
    with pytest.raises(VersionMismatchError):
        heatmap_grid(stats, taxonomy)


def test_stats_doc_roundtrip(corpus, taxonomy):
    import json

    stats = technique_frequency(corpus, taxonomy)
    doc = json.loads(json.dumps(stats_to_doc(stats, taxonomy)))
    assert stats_from_doc(doc) == stats
    assert len(doc["grid"]) == 47
