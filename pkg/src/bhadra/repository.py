"""File-backed attack-model repository: one JSON document per model.

A flat directory of documents keeps the corpus reviewable and diffable.
Writes go through a temp file plus atomic rename, so a crash at any point
leaves either the old document or the new one, never a torn file. Writers
take a lock and honor an optimistic-concurrency precondition on the stored
modified timestamp; readers see consistent index snapshots.
"""
from __future__ import annotations

import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path

from .attack_model import (
    AttackModel,
    parse_model,
    serialize_model,
    validate_model,
)
from .errors import (
    BhadraError,
    ConflictError,
    ParseError,
    UnknownIdError,
    ValidationFailedError,
    VersionMismatchError,
)
from .taxonomy import (
    AdversaryClass,
    Finding,
    FindingSeverity,
    Taxonomy,
    technique_by_id,
)


@dataclass(frozen=True)
class IndexEntry:
    path: Path
    modified: str
    title: str


@dataclass(frozen=True)
class ModelSummary:
    id: str
    title: str
    summary: str
    status: str
    adversary: tuple[str, ...]
    taxonomy_version: str
    tag_count: int
    modified: str

    def to_doc(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "summary": self.summary,
            "status": self.status,
            "adversary": list(self.adversary),
            "taxonomy_version": self.taxonomy_version,
            "tag_count": self.tag_count,
            "modified": self.modified,
        }


def _summarize(model: AttackModel) -> ModelSummary:
    order = list(AdversaryClass)
    return ModelSummary(
        id=model.id,
        title=model.title,
        summary=model.summary,
        status=model.status.value,
        adversary=tuple(a.value for a in order if a in model.adversary),
        taxonomy_version=model.taxonomy_version,
        tag_count=len(model.tags),
        modified=model.modified,
    )


class Repository:
    """Index over the valid model documents under one root directory.

    The index mirrors the directory as of the last scan plus this process's
    own writes; documents edited behind the repository's back are picked up
    by rescan().
    """

    def __init__(self, root: Path, taxonomy: Taxonomy):
        self.root = Path(root)
        self.taxonomy = taxonomy
        self._lock = threading.RLock()
        self._index: dict[str, IndexEntry] = {}
        self._lower_ids: dict[str, str] = {}
        self.scan_findings: tuple[Finding, ...] = ()

    # -- scanning -----------------------------------------------------

    def rescan(self) -> tuple[Finding, ...]:
        """Rebuild the index from disk; returns per-document warnings."""
        findings: list[Finding] = []
        index: dict[str, IndexEntry] = {}
        lower_ids: dict[str, str] = {}

        def warn(code: str, subject: str, message: str):
            findings.append(Finding(code, FindingSeverity.WARNING, subject, message))

        for path in sorted(self.root.glob("*.json")):
            try:
                model = parse_model(path)
            except ParseError as exc:
                warn("UNPARSEABLE_DOCUMENT", path.name, str(exc))
                continue
            try:
                report = validate_model(model, self.taxonomy)
            except VersionMismatchError as exc:
                warn("VERSION_MISMATCH", path.name, str(exc))
                continue
            if not report.is_valid:
                details = "; ".join(f.message for f in report.errors)
                warn("INVALID_DOCUMENT", path.name, details)
                continue
            key = model.id.lower()
            if key in lower_ids:
                warn("DUPLICATE_MODEL_ID", path.name,
                     f"model id {model.id!r} already provided by another document")
                continue
            lower_ids[key] = model.id
            index[model.id] = IndexEntry(
                path=path, modified=model.modified, title=model.title
            )

        with self._lock:
            self._index = index
            self._lower_ids = lower_ids
            self.scan_findings = tuple(findings)
        return self.scan_findings

    # -- reads --------------------------------------------------------

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._index)

    def __len__(self) -> int:
        with self._lock:
            return len(self._index)

    def __contains__(self, model_id: str) -> bool:
        with self._lock:
            return model_id in self._index

    def get(self, model_id: str) -> AttackModel:
        with self._lock:
            try:
                entry = self._index[model_id]
            except KeyError:
                raise UnknownIdError("model", model_id) from None
        return parse_model(entry.path)

    # -- writes -------------------------------------------------------

    def put(
        self, model: AttackModel, expected_modified: str | None = None
    ) -> AttackModel:
        """Store a model atomically.

        Rejects models whose validation yields Errors, and rejects writes
        whose expected_modified does not match the stored timestamp (the
        optimistic-concurrency precondition). Returns the model as stored.
        """
        report = validate_model(model, self.taxonomy)
        if not report.is_valid:
            raise ValidationFailedError(
                report, f"model {model.id!r} failed validation"
            )
        with self._lock:
            current = self._index.get(model.id)
            if expected_modified is not None:
                actual = current.modified if current else ""
                if expected_modified != actual:
                    raise ConflictError(model.id, expected_modified, actual)
            lower = model.id.lower()
            holder = self._lower_ids.get(lower)
            if holder is not None and holder != model.id:
                raise BhadraError(
                    f"model id {model.id!r} collides case-insensitively "
                    f"with existing {holder!r}"
                )
            path = current.path if current else self.root / f"{model.id}.json"
            self._write_atomic(path, serialize_model(model))
            self._index[model.id] = IndexEntry(
                path=path, modified=model.modified, title=model.title
            )
            self._lower_ids[lower] = model.id
        return model

    def delete(self, model_id: str) -> None:
        with self._lock:
            try:
                entry = self._index.pop(model_id)
            except KeyError:
                raise UnknownIdError("model", model_id) from None
            self._lower_ids.pop(model_id.lower(), None)
            try:
                entry.path.unlink()
            except FileNotFoundError:
                pass

    def _write_atomic(self, path: Path, text: str) -> None:
        fd, tmp_name = tempfile.mkstemp(
            dir=str(self.root), prefix=f".{path.stem}.", suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp_name, path)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise

    # -- queries ------------------------------------------------------

    def query(
        self,
        technique: str | None = None,
        adversary: AdversaryClass | str | None = None,
        impact: str | None = None,
        text: str | None = None,
    ) -> list[ModelSummary]:
        """Conjunctive filtering over the corpus, ordered by (title, id)."""
        if technique is not None:
            technique_by_id(self.taxonomy, technique)
        if impact is not None:
            impact_technique = technique_by_id(self.taxonomy, impact)
            if impact_technique.tactic != "IM":
                raise ValueError(
                    f"impact filter must name an IM technique, got {impact!r}"
                )
        if adversary is not None and not isinstance(adversary, AdversaryClass):
            try:
                adversary = AdversaryClass(adversary)
            except ValueError:
                raise UnknownIdError("adversary class", str(adversary)) from None

        needle = text.lower() if text else None
        results = []
        for model_id in self.ids():
            try:
                model = self.get(model_id)
            except (ParseError, UnknownIdError):
                continue  # deleted or corrupted behind our back
            tagged = model.technique_ids()
            if technique is not None and technique not in tagged:
                continue
            if impact is not None and impact not in tagged:
                continue
            if adversary is not None and adversary not in model.adversary:
                continue
            if needle is not None and needle not in (
                f"{model.id}\n{model.title}\n{model.summary}".lower()
            ):
                continue
            results.append(_summarize(model))
        results.sort(key=lambda s: (s.title, s.id))
        return results

    def load_all(self) -> list[AttackModel]:
        return [self.get(model_id) for model_id in self.ids()]


def open_repository(root: str | Path, taxonomy: Taxonomy) -> Repository:
    """Open a repository rooted at an existing directory and build its index."""
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"repository root does not exist: {root}")
    repo = Repository(root, taxonomy)
    repo.rescan()
    return repo
