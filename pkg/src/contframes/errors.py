"""Exception types shared across the package.

Every error raised by the library is one of these, so callers can tell a bad
construction parameter from a numerical failure without parsing messages.
"""

from __future__ import annotations


class InvalidDomainError(ValueError):
    """Degenerate or empty domain parameters (a >= b, n = 0, a_min <= 0, ...)."""


class InfeasiblePartitionError(ValueError):
    """Requested more partition blocks than there are points."""


class ShapeMismatchError(ValueError):
    """Mismatched lengths, dimensions or underlying measure spaces."""


class InvalidParameterError(ValueError):
    """Parameter outside its admissible range (p < 1, eps <= 0, zero vector, ...)."""


class InvalidSymbolError(ValueError):
    """Symbol fails a constraint required by the operation (negative or non-real weight)."""


class ContractViolationError(ValueError):
    """Input violates a checked precondition (non-Hermitian, non-orthonormal, ...)."""


class NotInvertibleError(ArithmeticError):
    """Matrix is singular or too ill-conditioned to invert at double precision."""

    def __init__(self, message: str, smallest_singular_value: float = 0.0):
        super().__init__(message)
        self.smallest_singular_value = smallest_singular_value


class NotAFrameError(ValueError):
    """Operation requires a frame but the lower bound is numerically zero."""


class NumericFailureError(RuntimeError):
    """A matrix decomposition failed to converge."""
