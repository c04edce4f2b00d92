"""Semantic exception hierarchy.

Every error raised by the library derives from :class:`HarbourneError`, so
callers (in particular the CLI) can separate domain failures from bugs.
Report-returning operations (validation, audits) do not raise; operations
whose contract *requires* a passing report raise :class:`ValidationFailed`
or :class:`AuditFailed` carrying that report.
"""

from __future__ import annotations


class HarbourneError(Exception):
    """Base class for all library errors."""


class InputFormatError(HarbourneError, ValueError):
    """External input (JSON document, CLI argument) violates its schema."""


class ParameterRange(HarbourneError, ValueError):
    """A numeric argument lies outside the range the operation is defined for."""


class NonNegativeEOnly(HarbourneError):
    """The ampleness criterion is only stated for surfaces with e >= 0."""


class ValidationFailed(HarbourneError):
    """The operation requires an arrangement profile passing validation."""

    def __init__(self, report, message: str = "profile fails validation"):
        super().__init__(message)
        self.report = report


class AuditFailed(HarbourneError):
    """The incidence structure does not realize the expected intersection data."""

    def __init__(self, report, message: str = "incidence audit failed"):
        super().__init__(message)
        self.report = report


class EmptySingularLocus(HarbourneError):
    """Per-singular-point ratios are undefined when there are no singular points."""


class C0DisjointRequired(HarbourneError):
    """The bound only applies to arrangements disjoint from the section C0."""


class BNotAE(HarbourneError):
    """A curve class disjoint from C0 forces b = a*e; the input has b != a*e."""


class MultiplicityProfileNotBinary26(HarbourneError):
    """Proportionality of strict transforms assumes only double and sixfold points."""


class NonIntegralCount(HarbourneError):
    """A curve count that must be an integer came out fractional."""


class InconsistentCurveStats(HarbourneError):
    """Per-curve point statistics are incompatible with the global profile."""
