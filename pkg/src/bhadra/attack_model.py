"""Attack models: technique tags with evidence over a pinned matrix version.

A model is an immutable value; every mutator returns a new model. One JSON
document per model, with a stable field order so stored corpora diff
cleanly. Unknown document fields survive a parse/serialize round trip
untouched, which lets newer tools add fields without breaking older ones.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from .errors import ParseError, VersionMismatchError
from .taxonomy import (
    AdversaryClass,
    Finding,
    FindingSeverity,
    Taxonomy,
    ValidationReport,
    technique_by_id,
)

# Tactics that an attack may legally skip; an empty column is still worth a
# second look from the analyst, hence the warnings.
INTERMEDIATE_TACTICS = ("PE", "DI", "LM", "SP", "DE", "CO")

_KNOWN_FIELDS = (
    "id", "title", "summary", "status", "adversary", "taxonomy_version",
    "tags", "sources", "created", "modified",
)


class Confidence(str, Enum):
    CONFIRMED = "Confirmed"
    SUSPECTED = "Suspected"


class ModelStatus(str, Enum):
    DRAFT = "Draft"
    FINAL = "Final"


@dataclass(frozen=True)
class TechniqueTag:
    """One tagged matrix cell: the technique plus why it applies."""

    technique: str
    evidence: str = ""
    confidence: Confidence = Confidence.CONFIRMED


@dataclass(frozen=True)
class AttackModel:
    id: str
    title: str
    taxonomy_version: str
    summary: str = ""
    status: ModelStatus = ModelStatus.DRAFT
    adversary: frozenset[AdversaryClass] = frozenset()
    tags: tuple[TechniqueTag, ...] = ()
    sources: tuple[str, ...] = ()
    created: str = ""
    modified: str = ""
    extra: dict = field(default_factory=dict)

    def technique_ids(self) -> frozenset[str]:
        return frozenset(t.technique for t in self.tags)

    def tag_for(self, technique_id: str) -> TechniqueTag | None:
        for tag in self.tags:
            if tag.technique == technique_id:
                return tag
        return None


def utc_now() -> str:
    """UTC ISO-8601 with a Z suffix; diff-stable and lexically ordered."""
    return (
        datetime.now(timezone.utc)
        .isoformat(timespec="microseconds")
        .replace("+00:00", "Z")
    )


def slugify(title: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", title.lower()).strip("-")
    return slug or "model"


def new_model(
    title: str,
    adversary: set[AdversaryClass] | frozenset[AdversaryClass],
    taxonomy: Taxonomy,
    model_id: str | None = None,
    summary: str = "",
) -> AttackModel:
    """A fresh Draft model pinned to the given matrix version."""
    if not title:
        raise ValueError("title must be non-empty")
    now = utc_now()
    return AttackModel(
        id=model_id or slugify(title),
        title=title,
        summary=summary,
        taxonomy_version=taxonomy.version,
        adversary=frozenset(adversary),
        created=now,
        modified=now,
    )


def tag_technique(
    model: AttackModel, tag: TechniqueTag, taxonomy: Taxonomy
) -> AttackModel:
    """Add a tag, or replace the existing tag for the same technique.

    Idempotent on the technique-id set; the tag keeps its original position
    when replaced, new techniques append.
    """
    if taxonomy.version != model.taxonomy_version:
        raise VersionMismatchError(model.taxonomy_version, taxonomy.version, model.id)
    technique_by_id(taxonomy, tag.technique)  # raises UnknownIdError
    if model.tag_for(tag.technique) is not None:
        tags = tuple(
            tag if t.technique == tag.technique else t for t in model.tags
        )
    else:
        tags = model.tags + (tag,)
    return replace(model, tags=tags, modified=utc_now())


def untag_technique(model: AttackModel, technique_id: str) -> AttackModel:
    """Remove the tag for a technique; no-op (and no touch) if absent."""
    if model.tag_for(technique_id) is None:
        return model
    tags = tuple(t for t in model.tags if t.technique != technique_id)
    return replace(model, tags=tags, modified=utc_now())


def validate_model(model: AttackModel, taxonomy: Taxonomy) -> ValidationReport:
    """Structural checks against the pinned matrix.

    Errors: unresolved or duplicated technique ids; a Final model without
    an Initial Access tag, without an Impacts tag, or with empty evidence.
    Warnings: intermediate tactics with no tags (legal, but flagged).
    """
    if taxonomy.version != model.taxonomy_version:
        raise VersionMismatchError(model.taxonomy_version, taxonomy.version, model.id)

    findings: list[Finding] = []
    seen: set[str] = set()
    tagged_tactics: set[str] = set()
    for tag in model.tags:
        if tag.technique in seen:
            findings.append(Finding(
                "DUPLICATE_TAG", FindingSeverity.ERROR, tag.technique,
                f"technique {tag.technique} is tagged more than once",
            ))
        seen.add(tag.technique)
        if not taxonomy.has_technique(tag.technique):
            findings.append(Finding(
                "UNKNOWN_TECHNIQUE", FindingSeverity.ERROR, tag.technique,
                f"technique {tag.technique!r} does not exist in taxonomy "
                f"{taxonomy.version}",
            ))
            continue
        tagged_tactics.add(technique_by_id(taxonomy, tag.technique).tactic)
        if model.status is ModelStatus.FINAL and not tag.evidence.strip():
            findings.append(Finding(
                "EMPTY_EVIDENCE", FindingSeverity.ERROR, tag.technique,
                f"Final model tag {tag.technique} has no evidence text",
            ))

    if model.status is ModelStatus.FINAL:
        if "IA" not in tagged_tactics:
            findings.append(Finding(
                "MISSING_INITIAL_ACCESS", FindingSeverity.ERROR, model.id,
                "a Final model needs at least one Initial Access tag",
            ))
        if "IM" not in tagged_tactics:
            findings.append(Finding(
                "MISSING_IMPACT", FindingSeverity.ERROR, model.id,
                "a Final model needs at least one Impacts tag",
            ))

    for tactic_id in INTERMEDIATE_TACTICS:
        if tactic_id not in tagged_tactics:
            findings.append(Finding(
                "EMPTY_TACTIC", FindingSeverity.WARNING, tactic_id,
                f"no technique tagged under {tactic_id}; attacks may skip it, "
                "but confirm this is intentional",
            ))

    return ValidationReport(tuple(findings))


class LintMode(str, Enum):
    OFF = "Off"
    WARN = "Warn"


@dataclass(frozen=True)
class CapabilityRuleset:
    """Which techniques each adversary class is plausibly able to use."""

    allowed: dict  # AdversaryClass -> frozenset[str]
    mode: LintMode = LintMode.WARN
    taxonomy_version: str = ""
    notes: str = ""

    def allowed_for(self, classes: frozenset[AdversaryClass]) -> frozenset[str]:
        out: set[str] = set()
        for cls in classes:
            out |= self.allowed.get(cls, frozenset())
        return frozenset(out)


def load_capability_ruleset(
    source: str | Path | dict, taxonomy: Taxonomy
) -> CapabilityRuleset:
    """Load a ruleset document and resolve every technique id it names."""
    if isinstance(source, dict):
        doc = source
    else:
        path = Path(source)
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ParseError(str(exc), locus=str(path)) from exc
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, locus=f"{path}:{exc.lineno}") from exc
    if "allowed" not in doc:
        raise ParseError("missing required field 'allowed'", locus="$")
    allowed: dict[AdversaryClass, frozenset[str]] = {}
    for raw_class, ids in doc["allowed"].items():
        try:
            cls = AdversaryClass(raw_class)
        except ValueError:
            raise ParseError(
                f"not a valid AdversaryClass: {raw_class!r}", locus="allowed"
            ) from None
        for tid in ids:
            technique_by_id(taxonomy, tid)  # raises UnknownIdError
        allowed[cls] = frozenset(ids)
    return CapabilityRuleset(
        allowed=allowed,
        mode=LintMode(doc.get("mode", "Warn")),
        taxonomy_version=doc.get("taxonomy_version", taxonomy.version),
        notes=doc.get("notes", ""),
    )


def default_capability_ruleset(taxonomy: Taxonomy) -> CapabilityRuleset:
    from .taxonomy import data_dir

    return load_capability_ruleset(
        data_dir() / "capability-rules-v1.json", taxonomy
    )


def lint_capabilities(
    model: AttackModel, ruleset: CapabilityRuleset
) -> ValidationReport:
    """Warn on tags outside what the model's adversary classes can plausibly do.

    Never errors: the capability map is an informal relation, so findings
    are review hints, not gates.
    """
    if ruleset.mode is LintMode.OFF:
        return ValidationReport()
    permitted = ruleset.allowed_for(model.adversary)
    findings = []
    classes = ", ".join(sorted(c.value for c in model.adversary)) or "none"
    for tag in model.tags:
        if tag.technique not in permitted:
            findings.append(Finding(
                "CAPABILITY_MISMATCH", FindingSeverity.WARNING, tag.technique,
                f"technique {tag.technique} is outside the expected reach of "
                f"the declared adversary classes ({classes})",
            ))
    return ValidationReport(tuple(findings))


def model_to_doc(model: AttackModel) -> dict:
    """Document form with the stable field order (see docs/schemas.md)."""
    adversary_order = list(AdversaryClass)
    doc = {
        "id": model.id,
        "title": model.title,
        "summary": model.summary,
        "status": model.status.value,
        "adversary": [a.value for a in adversary_order if a in model.adversary],
        "taxonomy_version": model.taxonomy_version,
        "tags": [
            {
                "technique": t.technique,
                "evidence": t.evidence,
                "confidence": t.confidence.value,
            }
            for t in model.tags
        ],
        "sources": list(model.sources),
        "created": model.created,
        "modified": model.modified,
    }
    for key in sorted(model.extra):
        doc[key] = model.extra[key]
    return doc


def serialize_model(model: AttackModel) -> str:
    return json.dumps(model_to_doc(model), indent=2, ensure_ascii=False) + "\n"


def parse_model(source: str | Path | dict) -> AttackModel:
    """Parse a model document; inverse of serialize_model.

    Requires id, title, and taxonomy_version. Unknown fields are kept in
    .extra and re-emitted on serialization.
    """
    if isinstance(source, dict):
        doc = source
        locus = "$"
    else:
        if isinstance(source, Path) or (
            isinstance(source, str) and not source.lstrip().startswith("{")
        ):
            path = Path(source)
            locus = str(path)
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as exc:
                raise ParseError(str(exc), locus=locus) from exc
        else:
            text = source
            locus = "$"
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(
                exc.msg, locus=f"{locus}: line {exc.lineno}, column {exc.colno}"
            ) from exc
    if not isinstance(doc, dict):
        raise ParseError("model document must be a JSON object", locus=locus)

    for key in ("id", "title", "taxonomy_version"):
        if key not in doc:
            raise ParseError(f"missing required field {key!r}", locus=locus)

    try:
        status = ModelStatus(doc.get("status", "Draft"))
    except ValueError:
        raise ParseError(
            f"not a valid status: {doc.get('status')!r}", locus=f"{locus}.status"
        ) from None

    adversary = set()
    for raw in doc.get("adversary", []):
        try:
            adversary.add(AdversaryClass(raw))
        except ValueError:
            raise ParseError(
                f"not a valid AdversaryClass: {raw!r}", locus=f"{locus}.adversary"
            ) from None

    tags = []
    for i, raw in enumerate(doc.get("tags", [])):
        if "technique" not in raw:
            raise ParseError(
                "missing required field 'technique'", locus=f"{locus}.tags[{i}]"
            )
        try:
            confidence = Confidence(raw.get("confidence", "Confirmed"))
        except ValueError:
            raise ParseError(
                f"not a valid confidence: {raw.get('confidence')!r}",
                locus=f"{locus}.tags[{i}]",
            ) from None
        tags.append(TechniqueTag(
            technique=raw["technique"],
            evidence=raw.get("evidence", ""),
            confidence=confidence,
        ))

    extra = {k: v for k, v in doc.items() if k not in _KNOWN_FIELDS}
    return AttackModel(
        id=str(doc["id"]),
        title=str(doc["title"]),
        summary=doc.get("summary", ""),
        status=status,
        adversary=frozenset(adversary),
        taxonomy_version=str(doc["taxonomy_version"]),
        tags=tuple(tags),
        sources=tuple(doc.get("sources", [])),
        created=doc.get("created", ""),
        modified=doc.get("modified", ""),
        extra=extra,
    )
