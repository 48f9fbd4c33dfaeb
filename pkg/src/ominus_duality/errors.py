"""Exception types raised by the library.

Validators never raise; they return :class:`~ominus_duality.report.Report`
objects.  The exceptions below are for operations whose preconditions fail.
"""

from __future__ import annotations

import os


class DualityError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidStructure(DualityError):
    """A constructor was handed data that fails its validator."""

    def __init__(self, message: str, report=None):
        super().__init__(message, witness=None if report is None else report.first_failure())
        self.report = report


class NotJoinPreserving(DualityError):
    pass


class NotMeetPreserving(DualityError):
    pass


class PreconditionViolated(DualityError):
    pass


class DomainViolation(DualityError):
    """Guarded co-residual queried outside ``[0, ¬w]``."""


class NotIrreducible(DualityError):
    pass


class InternalInvariantBroken(DualityError):
    """A computed object violates a theorem-guaranteed property."""


class NoWitness(DualityError):
    pass


class SpaceInvalid(DualityError):
    def __init__(self, message: str, report=None):
        super().__init__(message, witness=None if report is None else report.first_failure())
        self.report = report


class SizeCap(DualityError):
    pass


HARD_CAP = 64


def size_cap(default: int) -> int:
    """Element-count cap, overridable through ``DUALITY_MAX_SIZE`` (at most 64)."""
    raw = os.environ.get("DUALITY_MAX_SIZE")
    if raw is None or raw.strip() == "":
        return min(default, HARD_CAP)
    try:
        value = int(raw)
    except ValueError:
        raise SizeCap(f"DUALITY_MAX_SIZE must be an integer, got {raw!r}") from None
    return max(1, min(value, HARD_CAP))
