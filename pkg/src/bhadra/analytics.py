"""Corpus statistics: technique frequency, phase coverage, severity scoring.

Frequency counts models, not tags: a model contributes at most 1 to each
technique it tags, answering "how many of the modeled attacks use this".
The heatmap grid always covers all 47 cells so renderers need no special
case for untouched techniques.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .attack_model import AttackModel
from .errors import VersionMismatchError
from .taxonomy import Phase, Taxonomy, techniques_of

SHADE_BUCKETS = 4  # buckets 0..4; 0 means unused


@dataclass(frozen=True)
class CorpusStats:
    corpus_size: int
    taxonomy_version: str
    frequency: dict      # technique-id -> model count (> 0 entries only)
    tactic_totals: dict  # tactic-id -> sum of its techniques' frequencies
    unused: frozenset    # technique ids tagged by no model


@dataclass(frozen=True)
class PhaseCoverage:
    tagged_tactics: int
    total_tactics: int


@dataclass(frozen=True)
class HeatmapCell:
    technique: str
    tactic_ordinal: int
    row: int      # 0-based row within the tactic column
    count: int
    bucket: int   # 0..4, darker = more frequent


def technique_frequency(
    corpus: Sequence[AttackModel], taxonomy: Taxonomy
) -> CorpusStats:
    """Per-technique model counts over a corpus snapshot."""
    if not corpus:
        raise ValueError("corpus must be non-empty")
    for model in corpus:
        if model.taxonomy_version != taxonomy.version:
            raise VersionMismatchError(
                taxonomy.version, model.taxonomy_version, model.id
            )

    frequency: dict[str, int] = {}
    for model in corpus:
        for technique_id in model.technique_ids():
            frequency[technique_id] = frequency.get(technique_id, 0) + 1

    tactic_totals = {tactic.id: 0 for tactic in taxonomy.tactics}
    for technique_id, count in frequency.items():
        tactic_id = technique_id.split(".", 1)[0]
        if tactic_id in tactic_totals:
            tactic_totals[tactic_id] += count

    unused = taxonomy.technique_ids() - frequency.keys()
    return CorpusStats(
        corpus_size=len(corpus),
        taxonomy_version=taxonomy.version,
        frequency=frequency,
        tactic_totals=tactic_totals,
        unused=frozenset(unused),
    )


def phase_coverage(
    model: AttackModel, taxonomy: Taxonomy
) -> dict[Phase, PhaseCoverage]:
    """How many tactics of each phase carry at least one tag (3/3/2 denominators).

    Tags whose technique id does not resolve are ignored here; validate_model
    is the place that reports them.
    """
    tagged_tactics = {
        tid.split(".", 1)[0]
        for tid in model.technique_ids()
        if taxonomy.has_technique(tid)
    }
    coverage = {}
    for phase in Phase:
        tactics = [t for t in taxonomy.tactics if t.phase is phase]
        tagged = sum(1 for t in tactics if t.id in tagged_tactics)
        coverage[phase] = PhaseCoverage(
            tagged_tactics=tagged, total_tactics=len(tactics)
        )
    return coverage


def severity_score(
    model: AttackModel, severities: Mapping[str, int]
) -> int:
    """Sum of severities over tagged techniques; coverage gaps are errors."""
    score = 0
    for technique_id in sorted(model.technique_ids()):
        if technique_id not in severities:
            raise ValueError(
                f"severity map does not cover tagged technique {technique_id!r}"
            )
        score += severities[technique_id]
    return score


def shade_bucket(count: int, corpus_size: int) -> int:
    """ceil(4 * count / corpus_size), clamped to [0, 4]."""
    if corpus_size <= 0 or count <= 0:
        return 0
    bucket = -(-SHADE_BUCKETS * count // corpus_size)  # exact integer ceil
    return max(0, min(SHADE_BUCKETS, bucket))


def heatmap_grid(stats: CorpusStats, taxonomy: Taxonomy) -> list[HeatmapCell]:
    """All 47 cells with counts and shade buckets, in matrix order."""
    if stats.taxonomy_version != taxonomy.version:
        raise VersionMismatchError(taxonomy.version, stats.taxonomy_version, "stats")
    grid = []
    for tactic in taxonomy.tactics:
        for row, technique in enumerate(techniques_of(taxonomy, tactic.id)):
            count = stats.frequency.get(technique.id, 0)
            grid.append(HeatmapCell(
                technique=technique.id,
                tactic_ordinal=tactic.ordinal,
                row=row,
                count=count,
                bucket=shade_bucket(count, stats.corpus_size),
            ))
    return grid


def stats_to_doc(stats: CorpusStats, taxonomy: Taxonomy) -> dict:
    """JSON form, including the bucketed grid for renderers and the UI."""
    return {
        "taxonomy_version": stats.taxonomy_version,
        "corpus_size": stats.corpus_size,
        "frequency": {t: stats.frequency[t] for t in sorted(stats.frequency)},
        "tactic_totals": dict(stats.tactic_totals),
        "unused": sorted(stats.unused),
        "grid": [
            {
                "technique": cell.technique,
                "tactic_ordinal": cell.tactic_ordinal,
                "row": cell.row,
                "count": cell.count,
                "bucket": cell.bucket,
            }
            for cell in heatmap_grid(stats, taxonomy)
        ],
    }


def stats_from_doc(doc: dict) -> CorpusStats:
    """Inverse of stats_to_doc (the grid is derived, so it is recomputable)."""
    return CorpusStats(
        corpus_size=doc["corpus_size"],
        taxonomy_version=doc["taxonomy_version"],
        frequency=dict(doc["frequency"]),
        tactic_totals=dict(doc["tactic_totals"]),
        unused=frozenset(doc["unused"]),
    )
