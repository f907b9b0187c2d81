"""
Exception hierarchy for the t-spread toolkit.

Every error derives from ValueError so callers that only know about
``except ValueError`` keep working.
"""


class TSpreadError(ValueError):
    """Root of all errors raised by the package."""


class DomainError(TSpreadError):
    """A mathematical precondition does not hold."""


class SizeGuardError(DomainError):
    """A brute-force oracle refused an instance above its size guard."""


class InfeasibleError(DomainError):
    """A witness was requested for a vector that fails the feasibility test."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class FormatError(TSpreadError):
    """Malformed monomial, ideal file or f-vector text."""


class ConfigError(TSpreadError):
    """Malformed configuration value."""
