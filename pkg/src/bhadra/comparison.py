"""Multi-attack comparison: overlap matrix, Jaccard similarity, color layers.

All functions are pure over immutable inputs. Layer coloring is fully
deterministic: model i takes palette[i], and any cell shared by two or more
models takes the designated overlap color, the last palette entry. Ordering
ties are broken by matrix position, never by model id, so the visual layout
is stable across runs and input permutations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .attack_model import AttackModel
from .errors import VersionMismatchError
from .taxonomy import Taxonomy, technique_by_id

DEFAULT_PALETTE = ("#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
                   "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3")


@dataclass(frozen=True)
class OverlapMatrix:
    """Which models tag which techniques, for an ordered model list."""

    models: tuple[str, ...]
    cells: dict  # technique-id -> frozenset of model ids

    def members(self, technique_id: str) -> frozenset[str]:
        return self.cells.get(technique_id, frozenset())


@dataclass(frozen=True)
class ComparisonLayer:
    technique: str
    color: str
    members: frozenset[str]


@dataclass(frozen=True)
class DiffResult:
    only_a: frozenset[str]
    only_b: frozenset[str]
    common: frozenset[str]


def _require_same_version(models: Sequence[AttackModel]) -> str:
    versions = {m.taxonomy_version for m in models}
    if len(versions) > 1:
        first = models[0]
        other = next(m for m in models if m.taxonomy_version != first.taxonomy_version)
        raise VersionMismatchError(
            first.taxonomy_version, other.taxonomy_version, other.id
        )
    return models[0].taxonomy_version


def overlap(models: Sequence[AttackModel]) -> OverlapMatrix:
    """The occupancy map: for every tagged technique, who tags it."""
    if len(models) < 2:
        raise ValueError("overlap needs at least 2 models")
    ids = [m.id for m in models]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate model ids in comparison: {ids}")
    _require_same_version(models)
    cells: dict[str, frozenset[str]] = {}
    for model in models:
        for technique_id in model.technique_ids():
            cells[technique_id] = cells.get(technique_id, frozenset()) | {model.id}
    return OverlapMatrix(models=tuple(ids), cells=cells)


def similarity(a: AttackModel, b: AttackModel) -> float:
    """Jaccard index of the two technique-id sets, in [0, 1]."""
    _require_same_version([a, b])
    set_a, set_b = a.technique_ids(), b.technique_ids()
    if not set_a and not set_b:
        raise ValueError(
            "similarity is undefined when both models have empty tag sets"
        )
    return len(set_a & set_b) / len(set_a | set_b)


def diff(a: AttackModel, b: AttackModel) -> DiffResult:
    """Partition of the union of both tag sets."""
    _require_same_version([a, b])
    set_a, set_b = a.technique_ids(), b.technique_ids()
    return DiffResult(
        only_a=frozenset(set_a - set_b),
        only_b=frozenset(set_b - set_a),
        common=frozenset(set_a & set_b),
    )


def build_layers(
    models: Sequence[AttackModel],
    palette: Sequence[str],
    taxonomy: Taxonomy,
) -> list[ComparisonLayer]:
    """One colored layer per occupied cell, in matrix order.

    Needs one color per input model plus, when any cell is shared, the
    overlap color at the end of the palette.
    """
    matrix = overlap(models)
    has_overlap = any(len(members) > 1 for members in matrix.cells.values())
    needed = len(models) + (1 if has_overlap else 0)
    if len(palette) < needed:
        raise ValueError(
            f"palette too short: need {needed} colors "
            f"({len(models)} models{' + overlap' if has_overlap else ''}), "
            f"got {len(palette)}"
        )
    color_of_model = {m.id: palette[i] for i, m in enumerate(models)}
    overlap_color = palette[-1]

    def matrix_position(technique_id: str) -> tuple[int, int]:
        technique = technique_by_id(taxonomy, technique_id)
        tactic = taxonomy.tactic_by_id(technique.tactic)
        return (tactic.ordinal, technique.ordinal)

    layers = []
    for technique_id in sorted(matrix.cells, key=matrix_position):
        members = matrix.cells[technique_id]
        if len(members) > 1:
            color = overlap_color
        else:
            color = color_of_model[next(iter(members))]
        layers.append(ComparisonLayer(
            technique=technique_id, color=color, members=members,
        ))
    return layers


def comparison_to_doc(
    matrix: OverlapMatrix,
    layers: Sequence[ComparisonLayer],
    taxonomy_version: str,
) -> dict:
    """JSON form consumed by the renderer and the navigator UI."""
    order = {model_id: i for i, model_id in enumerate(matrix.models)}
    return {
        "taxonomy_version": taxonomy_version,
        "models": list(matrix.models),
        "cells": {
            technique_id: sorted(members, key=order.__getitem__)
            for technique_id, members in sorted(matrix.cells.items())
        },
        "layers": [
            {
                "technique": layer.technique,
                "color": layer.color,
                "members": sorted(layer.members, key=order.__getitem__),
            }
            for layer in layers
        ],
    }


def comparison_from_doc(doc: dict) -> tuple[OverlapMatrix, list[ComparisonLayer]]:
    """Inverse of comparison_to_doc."""
    matrix = OverlapMatrix(
        models=tuple(doc["models"]),
        cells={t: frozenset(ids) for t, ids in doc["cells"].items()},
    )
    layers = [
        ComparisonLayer(
            technique=raw["technique"],
            color=raw["color"],
            members=frozenset(raw["members"]),
        )
        for raw in doc["layers"]
    ]
    return matrix, layers
