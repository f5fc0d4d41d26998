"""Shared exception types.

Everything raised on purpose by this package derives from BhadraError, so
callers (CLI, HTTP service) can triage failures without matching on message
strings.
"""
from __future__ import annotations


class BhadraError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BhadraError, ValueError):
    """A document could not be parsed. Carries a locus (file/field/line)."""

    def __init__(self, message: str, locus: str | None = None):
        self.locus = locus
        super().__init__(message if locus is None else f"{locus}: {message}")


class UnknownIdError(BhadraError, KeyError):
    """An id (tactic, technique, adversary, model) does not resolve."""

    def __init__(self, kind: str, value: str):
        self.kind = kind
        self.value = value
        super().__init__(f"unknown {kind}: {value!r}")

    def __str__(self) -> str:  # KeyError quotes its arg; keep message readable
        return self.args[0]


class VersionMismatchError(BhadraError, ValueError):
    """Operands are pinned to different taxonomy versions."""

    def __init__(self, expected: str, actual: str, subject: str = ""):
        self.expected = expected
        self.actual = actual
        prefix = f"{subject}: " if subject else ""
        super().__init__(
            f"{prefix}taxonomy version mismatch: expected {expected!r}, got {actual!r}"
        )


class ValidationFailedError(BhadraError):
    """An operation refused its input because validation produced Errors.

    The full report is attached so callers can surface every finding.
    """

    def __init__(self, report, message: str = "validation failed"):
        self.report = report
        super().__init__(message)


class ConflictError(BhadraError):
    """Optimistic-concurrency precondition failed (stale expected_modified)."""

    def __init__(self, model_id: str, expected: str, actual: str):
        self.model_id = model_id
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"model {model_id!r} was modified at {actual!r}, not {expected!r}"
        )
