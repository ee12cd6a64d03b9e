"""Exception and warning types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class FuzzySNAError(Exception):
    """Base class for errors raised by this package."""


class DomainError(FuzzySNAError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class InvalidPathError(FuzzySNAError, ValueError):
    """A node sequence is not a simple path of the graph."""


class UnknownNodeError(FuzzySNAError, KeyError):
    """A node label is not part of the graph or roster."""

    def __str__(self):
        # KeyError renders its argument with repr; keep the plain message.
        return self.args[0] if self.args else ""


@dataclass(frozen=True)
class FormatIssue:
    """One violation found while parsing a file.

    location is a 1-based line number for line formats and a JSON-path-ish
    string for object formats.
    """

    location: str
    message: str

    def __str__(self):
        return f"{self.location}: {self.message}"


class FormatError(FuzzySNAError, ValueError):
    """A file does not conform to its declared format.

    Parsing is exhaustive: every violation found is reported, not only the
    first one.
    """

    def __init__(self, filename: str, issues: list[FormatIssue]):
        self.filename = filename
        self.issues = list(issues)
        lines = "\n".join(f"  {issue}" for issue in self.issues)
        super().__init__(f"{filename}: {len(self.issues)} format issue(s)\n{lines}")


class IngestionWarning(UserWarning):
    """Recoverable oddity in questionnaire data (duplicates, dead samples)."""


class TruncationWarning(UserWarning):
    """A path enumeration hit its cap; downstream values may be partial."""
