"""Threat-matrix tooling for mobile communication systems.

A canonical tactic/technique matrix with validation, attack-model authoring
and linting, multi-attack comparison, corpus analytics, a file-backed model
repository with an HTTP API, and a CLI.
"""

__version__ = "0.1.0"

from .analytics import (
    CorpusStats,
    HeatmapCell,
    PhaseCoverage,
    heatmap_grid,
    phase_coverage,
    severity_score,
    shade_bucket,
    technique_frequency,
)
from .attack_model import (
    AttackModel,
    CapabilityRuleset,
    Confidence,
    LintMode,
    ModelStatus,
    TechniqueTag,
    default_capability_ruleset,
    lint_capabilities,
    load_capability_ruleset,
    model_to_doc,
    new_model,
    parse_model,
    serialize_model,
    tag_technique,
    untag_technique,
    validate_model,
)
from .comparison import (
    ComparisonLayer,
    DiffResult,
    OverlapMatrix,
    build_layers,
    diff,
    overlap,
    similarity,
)
from .errors import (
    BhadraError,
    ConflictError,
    ParseError,
    UnknownIdError,
    ValidationFailedError,
    VersionMismatchError,
)
from .repository import ModelSummary, Repository, open_repository
from .taxonomy import (
    AdversaryClass,
    Finding,
    FindingSeverity,
    Phase,
    Subsystem,
    Tactic,
    Taxonomy,
    Technique,
    ValidationReport,
    bundled_models_dir,
    default_taxonomy_path,
    load_canonical_taxonomy,
    load_taxonomy,
    phase_of,
    serialize_taxonomy,
    technique_by_id,
    techniques_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
