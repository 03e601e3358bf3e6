"""Exception types shared across the package."""


class ClawColorError(Exception):
    """Base class for all package errors."""


class ContractError(ClawColorError, ValueError):
    """An operation was called with inputs violating its precondition."""


class ParseError(ClawColorError, ValueError):
    """Malformed DIMACS or JSON input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(ClawColorError):
    """An exact oracle was asked to solve an instance above its size cap."""


class BudgetExceeded(ClawColorError):
    """A budgeted procedure gave up before finishing."""


class ExtensionError(ClawColorError):
    """A coloring extension could not be completed (should not happen at threshold)."""


class InvariantViolation(ClawColorError, AssertionError):
    """An internal invariant that the theory guarantees did not hold."""
