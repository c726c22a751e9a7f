"""Exception types shared across the package."""

from __future__ import annotations


class AssocSpecError(Exception):
    """Base class for all errors raised by this package."""


class BracketingSyntaxError(AssocSpecError, ValueError):
    """A bracketing string could not be parsed.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GraphFormatError(AssocSpecError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidStructureError(AssocSpecError, ValueError):
    """A tree, zag sequence, Dyck path or graph violates its invariants."""


class BudgetExceeded(AssocSpecError, RuntimeError):
    """An enumeration would pass its configured cap.

    ``partial`` optionally carries whatever was completed before the cap hit.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
