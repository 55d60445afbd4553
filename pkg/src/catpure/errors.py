"""Shared error types and enumeration caps.

Every enumeration in the package runs under an explicit candidate cap.
Exceeding a cap raises :class:`CapExceededError`; results are never
silently truncated.
"""

from __future__ import annotations

import os

DEFAULT_BOUND = 10**6
_BOUND_ENV = "CATPURE_DEFAULT_BOUND"


def default_bound() -> int:
    """Candidate cap used when a caller does not pass one explicitly.

    Reads the CATPURE_DEFAULT_BOUND environment variable when set.
    """
    raw = os.environ.get(_BOUND_ENV)
    if raw is None:
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise UsageError(f"{_BOUND_ENV} must be positive, got {value}")
    return value


class CatpureError(Exception):
    """Base class for all package errors."""


class CapExceededError(CatpureError):
    """An enumeration would exceed its candidate cap."""

    def __init__(self, message: str, needed: int | None = None, bound: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.bound = bound


class PreconditionError(CatpureError):
    """An operation was called on inputs violating its stated precondition."""


class MissingLimitError(CatpureError):
    """A required (co)limit does not exist in the ambient category.

    Distinct from a negative verdict: the computation could not even be
    set up, e.g. a regularity check whose cokernel pair is missing.
    """


class FormatError(CatpureError):
    """Malformed JSON input; message carries the offending position/key."""


class UsageError(CatpureError):
    """Bad CLI arguments or configuration."""
