"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes, so library code raises them
instead of bare ValueError/RuntimeError wherever the distinction matters.
"""


class CodeliftError(Exception):
    """Base class for all package errors."""


class ValidationError(CodeliftError, ValueError):
    """Malformed or inconsistent input (bad field, size mismatch, range)."""


class StandingAssumptionError(ValidationError):
    """An equivalence query violates the standing assumptions it relies on."""


class GuardExceeded(CodeliftError):
    """An enumeration guard was tripped; the instance is too large."""

    def __init__(self, guard: str, limit: str, actual: str):
        self.guard = guard
        self.limit = limit
        self.actual = actual
        super().__init__(f"guard '{guard}' exceeded: limit {limit}, got {actual}")


class InvariantViolation(CodeliftError):
    """An internal cross-check failed; indicates a bug or a falsified theorem."""
