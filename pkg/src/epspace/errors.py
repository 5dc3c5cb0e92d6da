"""Semantic exception hierarchy for the package.

Public functions raise these instead of bare ``ValueError`` so callers can
distinguish malformed input (:class:`ParseError`), broken value invariants
(:class:`InvalidEventError`), and space-construction violations
(:class:`SchemaError`, :class:`NormalizationError`, :class:`NonNegativityError`,
:class:`AlgebraError`).  Evaluating an event outside the measurable family
raises :class:`EventNotMeasurableError`.
"""

from __future__ import annotations


class EpspaceError(Exception):
    """Base error for this package."""


class ParseError(EpspaceError, ValueError):
    """Malformed textual input (event syntax or a space document)."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class InvalidEventError(EpspaceError, ValueError):
    """An event value would break its invariants (label with both signs, bad label)."""


class SchemaError(EpspaceError, ValueError):
    """Labels and weight keys disagree, or a weight literal is not an exact rational."""


class NormalizationError(EpspaceError, ValueError):
    """Atom weights do not sum to exactly 1."""


class NonNegativityError(EpspaceError, ValueError):
    """An atom weight is negative."""


class AlgebraError(EpspaceError, ValueError):
    """The positive family is not a set algebra containing the full positive event."""


class EventNotMeasurableError(EpspaceError, LookupError):
    """The event is not a member of the space's measurable family."""
