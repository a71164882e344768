"""
Error types for the lie2weyl engine.

Every error carries the exit code the command-line surface reports for it.
"""
from typing import Optional, Sequence, Tuple


class Lie2WeylError(Exception):
    """Base class of all engine errors."""

    exit_code = 4

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UsageError(Lie2WeylError):
    """Invalid command-line usage or an unknown catalog name."""

    exit_code = 2


class PreconditionError(Lie2WeylError, ValueError):
    """An operation was called outside its documented domain."""

    exit_code = 2


class DimensionMismatchError(Lie2WeylError, ValueError):
    """Operands live over different dimensions."""

    exit_code = 2


class AlgebraError(Lie2WeylError):
    """A structure-constant table is malformed or violates a Lie algebra axiom."""

    exit_code = 3

    def __init__(self, message: str, witness: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.witness: Optional[Tuple[int, ...]] = tuple(witness) if witness is not None else None

    def __str__(self) -> str:
        if self.witness is None:
            return self.message
        return f"{self.message} (witness {list(self.witness)})"


class TruncationError(Lie2WeylError, ValueError):
    """A coefficient beyond the known truncation order was requested."""


class InvariantBreachError(Lie2WeylError):
    """An internal invariant of the engine does not hold."""


class TermBudgetExceeded(InvariantBreachError):
    """An element grew beyond the configured monomial budget."""
