"""The canonical threat matrix: phases, tactics, techniques, and its loader.

The matrix is shipped as a versioned JSON document (see data/bhadra-v1.json
and docs/schemas.md). Loading validates every structural invariant; the
result is an immutable value that is safe to share across threads. Edits to
the matrix happen by producing a new versioned file, never by mutating a
loaded Taxonomy.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import ParseError, UnknownIdError, ValidationFailedError

TAXONOMY_FILENAME = "bhadra-v1.json"

# Fixed shape of the matrix. The loader enforces these, so any file that
# loads successfully is guaranteed to be a structurally faithful matrix.
TACTIC_COUNT = 8
TECHNIQUE_COUNT = 47
EXPECTED_TECHNIQUES_PER_TACTIC = {
    "IA": 7, "PE": 5, "DI": 6, "LM": 3, "SP": 5, "DE": 8, "CO": 5, "IM": 8,
}
EXPECTED_TACTICS_PER_PHASE = {"Mounting": 3, "Execution": 3, "Results": 2}
EXPECTED_TECHNIQUES_PER_PHASE = {"Mounting": 18, "Execution": 16, "Results": 13}
EXPECTED_PHASE_OF_TACTIC = {
    "IA": "Mounting", "PE": "Mounting", "DI": "Mounting",
    "LM": "Execution", "SP": "Execution", "DE": "Execution",
    "CO": "Results", "IM": "Results",
}


class Phase(str, Enum):
    """The three ordered stages of an attack life cycle."""

    MOUNTING = "Mounting"
    EXECUTION = "Execution"
    RESULTS = "Results"

    @property
    def ordinal(self) -> int:
        return {"Mounting": 1, "Execution": 2, "Results": 3}[self.value]

    def __lt__(self, other: "Phase") -> bool:
        return self.ordinal < other.ordinal


class Subsystem(str, Enum):
    """Network segments a technique touches."""

    UE = "UE"        # user equipment, incl. SIM
    RAN = "RAN"      # radio access network
    CN = "CN"        # core network
    SAN = "SAN"      # service and application network
    OSMN = "OSMN"    # operations, support & maintenance network
    IRN = "IRN"      # interconnection and roaming network


class AdversaryClass(str, Enum):
    """Actor classes distinguished by the kind of access they hold."""

    RADIO_LINK_ATTACKER = "RadioLinkAttacker"
    EVIL_MOBILE_OPERATOR = "EvilMobileOperator"
    HUMAN_INSIDER = "HumanInsider"
    HARDWARE_SIM_MANUFACTURER = "HardwareSimManufacturer"
    SOFTWARE_OS_VENDOR = "SoftwareOsVendor"
    LAW_ENFORCEMENT_GOVERNMENT = "LawEnforcementGovernment"
    EVIL_MOBILE_USER = "EvilMobileUser"


class FindingSeverity(str, Enum):
    ERROR = "Error"
    WARNING = "Warning"


@dataclass(frozen=True)
class Finding:
    """One validation observation: a stable code plus a human explanation."""

    code: str
    severity: FindingSeverity
    subject: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validation pass. Valid iff there are no Error findings."""

    findings: tuple[Finding, ...] = ()

    @property
    def status(self) -> str:
        return "Invalid" if self.errors else "Valid"

    @property
    def is_valid(self) -> bool:
        return not self.errors

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is FindingSeverity.ERROR)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is FindingSeverity.WARNING)

    def to_doc(self) -> dict:
        return {
            "status": self.status,
            "findings": [
                {
                    "code": f.code,
                    "severity": f.severity.value,
                    "subject": f.subject,
                    "message": f.message,
                }
                for f in self.findings
            ],
        }


@dataclass(frozen=True)
class Tactic:
    """A column of the matrix: one tactical goal within a phase."""

    id: str
    name: str
    phase: Phase
    ordinal: int
    description: str = ""


@dataclass(frozen=True)
class Technique:
    """A cell of the matrix: one way of pursuing its tactic's goal."""

    id: str
    name: str
    tactic: str
    description: str = ""
    subsystems: frozenset[Subsystem] = frozenset()
    adversaries: frozenset[AdversaryClass] = frozenset()
    references: tuple[str, ...] = ()
    severity: int | None = None

    @property
    def ordinal(self) -> int:
        """Row position encoded in the dotted id (IA.2 -> 2)."""
        return int(self.id.split(".", 1)[1])


@dataclass(frozen=True)
class Taxonomy:
    """The full, validated matrix. Immutable after load."""

    version: str
    tactics: tuple[Tactic, ...]
    techniques: tuple[Technique, ...]
    provenance: str = ""
    _tactic_index: dict = field(default_factory=dict, compare=False, repr=False)
    _technique_index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_tactic_index", {t.id: t for t in self.tactics})
        object.__setattr__(self, "_technique_index", {t.id: t for t in self.techniques})

    def tactic_by_id(self, tactic_id: str) -> Tactic:
        try:
            return self._tactic_index[tactic_id]
        except KeyError:
            raise UnknownIdError("tactic", tactic_id) from None

    def technique_ids(self) -> frozenset[str]:
        return frozenset(self._technique_index)

    def has_technique(self, technique_id: str) -> bool:
        return technique_id in self._technique_index


def technique_by_id(taxonomy: Taxonomy, technique_id: str) -> Technique:
    """The unique technique with this id, or UnknownIdError."""
    try:
        return taxonomy._technique_index[technique_id]
    except KeyError:
        raise UnknownIdError("technique", technique_id) from None


def techniques_of(taxonomy: Taxonomy, tactic_id: str) -> list[Technique]:
    """All techniques of one tactic, in file (row) order."""
    taxonomy.tactic_by_id(tactic_id)
    return [t for t in taxonomy.techniques if t.tactic == tactic_id]


def phase_of(taxonomy: Taxonomy, tactic_id: str) -> Phase:
    """The phase owning a tactic."""
    return taxonomy.tactic_by_id(tactic_id).phase


def _enum_value(enum_cls, raw, locus: str):
    try:
        return enum_cls(raw)
    except ValueError:
        raise ParseError(
            f"not a valid {enum_cls.__name__}: {raw!r}", locus=locus
        ) from None


def _parse_document(doc: dict) -> Taxonomy:
    """Structural parse only; invariants are checked separately."""
    if not isinstance(doc, dict):
        raise ParseError("taxonomy document must be a JSON object", locus="$")
    for key in ("version", "phases", "tactics", "techniques"):
        if key not in doc:
            raise ParseError(f"missing required field {key!r}", locus="$")

    phase_ids = [p.get("id") for p in doc["phases"]]
    if phase_ids != ["Mounting", "Execution", "Results"]:
        raise ParseError(
            f"phases must be exactly Mounting, Execution, Results in order, got {phase_ids}",
            locus="phases",
        )

    tactics = []
    for i, raw in enumerate(doc["tactics"]):
        locus = f"tactics[{i}]"
        for key in ("id", "name", "phase"):
            if key not in raw:
                raise ParseError(f"missing required field {key!r}", locus=locus)
        tactics.append(
            Tactic(
                id=raw["id"],
                name=raw["name"],
                phase=_enum_value(Phase, raw["phase"], f"{locus}.phase"),
                ordinal=int(raw.get("ordinal", i + 1)),
                description=raw.get("description", ""),
            )
        )

    techniques = []
    for i, raw in enumerate(doc["techniques"]):
        locus = f"techniques[{i}]"
        for key in ("id", "name", "tactic"):
            if key not in raw:
                raise ParseError(f"missing required field {key!r}", locus=locus)
        severity = raw.get("severity")
        if severity is not None:
            severity = int(severity)
        techniques.append(
            Technique(
                id=raw["id"],
                name=raw["name"],
                tactic=raw["tactic"],
                description=raw.get("description", ""),
                subsystems=frozenset(
                    _enum_value(Subsystem, s, f"{locus}.subsystems")
                    for s in raw.get("subsystems", [])
                ),
                adversaries=frozenset(
                    _enum_value(AdversaryClass, a, f"{locus}.adversaries")
                    for a in raw.get("adversaries", [])
                ),
                references=tuple(raw.get("references", [])),
                severity=severity,
            )
        )

    return Taxonomy(
        version=str(doc["version"]),
        tactics=tuple(tactics),
        techniques=tuple(techniques),
        provenance=doc.get("provenance", ""),
    )


def check_invariants(taxonomy: Taxonomy) -> ValidationReport:
    """Every structural rule the matrix must satisfy, as findings."""
    findings: list[Finding] = []

    def err(code: str, subject: str, message: str):
        findings.append(Finding(code, FindingSeverity.ERROR, subject, message))

    if len(taxonomy.tactics) != TACTIC_COUNT:
        err("CARDINALITY", "tactics",
            f"expected {TACTIC_COUNT} tactics, found {len(taxonomy.tactics)}")
    if len(taxonomy.techniques) != TECHNIQUE_COUNT:
        err("CARDINALITY", "techniques",
            f"expected {TECHNIQUE_COUNT} techniques, found {len(taxonomy.techniques)}")

    tactic_ids = [t.id for t in taxonomy.tactics]
    for dup in _duplicates(tactic_ids):
        err("DUPLICATE_ID", dup, f"tactic id {dup!r} appears more than once")
    technique_ids = [t.id for t in taxonomy.techniques]
    for dup in _duplicates(technique_ids):
        err("DUPLICATE_ID", dup, f"technique id {dup!r} appears more than once")
    for dup in set(tactic_ids) & set(technique_ids):
        err("DUPLICATE_ID", dup, f"id {dup!r} used for both a tactic and a technique")

    known_tactics = set(tactic_ids)
    for tactic in taxonomy.tactics:
        expected_phase = EXPECTED_PHASE_OF_TACTIC.get(tactic.id)
        if expected_phase is None:
            err("UNKNOWN_TACTIC", tactic.id,
                f"tactic id {tactic.id!r} is not one of the eight matrix columns")
        elif tactic.phase.value != expected_phase:
            err("PHASE_MISMATCH", tactic.id,
                f"tactic {tactic.id} must sit in phase {expected_phase}, "
                f"found {tactic.phase.value}")

    for technique in taxonomy.techniques:
        if technique.tactic not in known_tactics:
            err("UNKNOWN_TACTIC", technique.id,
                f"technique {technique.id} references unknown tactic {technique.tactic!r}")
        prefix = technique.id.split(".", 1)[0]
        if prefix != technique.tactic:
            err("ID_PREFIX_MISMATCH", technique.id,
                f"technique id {technique.id!r} must be prefixed by its tactic "
                f"{technique.tactic!r}")
        if technique.severity is not None and not 1 <= technique.severity <= 5:
            err("SEVERITY_RANGE", technique.id,
                f"severity must be in [1, 5], found {technique.severity}")

    per_tactic: dict[str, int] = {tid: 0 for tid in EXPECTED_TECHNIQUES_PER_TACTIC}
    for technique in taxonomy.techniques:
        if technique.tactic in per_tactic:
            per_tactic[technique.tactic] += 1
    for tactic_id, expected in EXPECTED_TECHNIQUES_PER_TACTIC.items():
        if per_tactic[tactic_id] != expected:
            err("CARDINALITY", tactic_id,
                f"tactic {tactic_id} must hold exactly {expected} techniques, "
                f"found {per_tactic[tactic_id]}")

    per_phase: dict[str, int] = {p: 0 for p in EXPECTED_TECHNIQUES_PER_PHASE}
    for technique in taxonomy.techniques:
        phase = EXPECTED_PHASE_OF_TACTIC.get(technique.tactic)
        if phase is not None:
            per_phase[phase] += 1
    for phase_name, expected in EXPECTED_TECHNIQUES_PER_PHASE.items():
        if per_phase[phase_name] != expected:
            err("CARDINALITY", phase_name,
                f"phase {phase_name} must hold {expected} techniques, "
                f"found {per_phase[phase_name]}")

    return ValidationReport(tuple(findings))


def load_taxonomy(source: str | Path | dict) -> Taxonomy | ValidationReport:
    """Load and validate a taxonomy document.

    Accepts a file path, a JSON string, or an already-parsed document dict.
    Returns the Taxonomy when every invariant holds, otherwise an Invalid
    report listing every violation. Malformed input (bad JSON, missing or
    ill-typed fields) raises ParseError instead; a partial Taxonomy is never
    returned.
    """
    if isinstance(source, dict):
        doc = source
    else:
        if isinstance(source, Path) or (
            isinstance(source, str) and not source.lstrip().startswith("{")
        ):
            path = Path(source)
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as exc:
                raise ParseError(str(exc), locus=str(path)) from exc
        else:
            text = source
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, locus=f"line {exc.lineno}, column {exc.colno}") from exc

    taxonomy = _parse_document(doc)
    report = check_invariants(taxonomy)
    if not report.is_valid:
        return report
    return taxonomy


def taxonomy_to_doc(taxonomy: Taxonomy) -> dict:
    """The document form, with stable field and collection order."""
    subsystem_order = list(Subsystem)
    adversary_order = list(AdversaryClass)
    techniques = []
    for t in taxonomy.techniques:
        entry: dict = {
            "id": t.id,
            "name": t.name,
            "tactic": t.tactic,
            "description": t.description,
            "subsystems": [s.value for s in subsystem_order if s in t.subsystems],
            "adversaries": [a.value for a in adversary_order if a in t.adversaries],
            "references": list(t.references),
        }
        if t.severity is not None:
            entry["severity"] = t.severity
        techniques.append(entry)
    return {
        "version": taxonomy.version,
        "provenance": taxonomy.provenance,
        "phases": [
            {"id": p.value, "ordinal": p.ordinal} for p in Phase
        ],
        "tactics": [
            {
                "id": t.id,
                "name": t.name,
                "phase": t.phase.value,
                "ordinal": t.ordinal,
                "description": t.description,
            }
            for t in taxonomy.tactics
        ],
        "techniques": techniques,
    }


def serialize_taxonomy(taxonomy: Taxonomy) -> str:
    return json.dumps(taxonomy_to_doc(taxonomy), indent=2, ensure_ascii=False) + "\n"


def data_dir() -> Path:
    """Directory holding the bundled canonical data files."""
    return Path(str(resources.files("bhadra") / "data"))


def default_taxonomy_path() -> Path:
    return data_dir() / TAXONOMY_FILENAME


def bundled_models_dir() -> Path:
    return data_dir() / "models"


def load_canonical_taxonomy() -> Taxonomy:
    """The bundled matrix; raises if the shipped file is broken."""
    result = load_taxonomy(default_taxonomy_path())
    if isinstance(result, ValidationReport):
        raise ValidationFailedError(result, "bundled taxonomy file is invalid")
    return result


def _duplicates(values: Iterable[str]) -> list[str]:
    seen: set[str] = set()
    dups: list[str] = []
    for v in values:
        if v in seen and v not in dups:
            dups.append(v)
        seen.add(v)
    return dups
