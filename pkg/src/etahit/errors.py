"""Exception hierarchy shared across the package."""

from __future__ import annotations

from typing import Any


class EtaHitError(Exception):
    """Root of all package errors."""


class EmptyGraphError(EtaHitError, ValueError):
    """The null graph has no maximum stable sets to hit."""


class ResourceCapError(EtaHitError):
    """A configured size cap or search budget was exceeded."""


class EnumerationCapError(ResourceCapError):
    pass


class PerfectionCapError(ResourceCapError):
    pass


class ColouringBudgetError(ResourceCapError):
    """Exact colouring gave up; ``classes`` holds the best colouring found."""

    def __init__(self, message: str, classes: list[int]):
        super().__init__(message)
        self.classes = classes


class ColouringLimitError(EtaHitError):
    """Chromatic number exceeds the requested limit."""

    def __init__(self, message: str, lower_bound: int):
        super().__init__(message)
        self.lower_bound = lower_bound


class NotInClassError(EtaHitError):
    """Input violates a class precondition; ``witness`` locates the obstruction."""

    def __init__(self, message: str, witness: Any = None, pattern: str | None = None):
        super().__init__(message)
        self.witness = witness
        self.pattern = pattern


class InvariantViolation(EtaHitError, AssertionError):
    """A runtime-checked structural claim failed.

    ``label`` names the claim (for instance ``"Y-size"``) and ``witness`` holds
    whatever data exhibits the failure. On class-conforming input this signals a
    bug; otherwise it usually means the input left the class.
    """

    def __init__(self, label: str, message: str, witness: Any = None):
        super().__init__(f"[{label}] {message}")
        self.label = label
        self.witness = witness


class BudgetExceeded(EtaHitError):
    """A hitting-set provider returned more vertices than its declared budget."""
