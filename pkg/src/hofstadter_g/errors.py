"""Exception types shared across the package."""

from __future__ import annotations


class RangeError(OverflowError):
    """A value left the checked unsigned 64-bit range."""


class ValidationError(ValueError):
    """An argument violates the invariants of its type."""


class NoParentError(ValueError):
    """The root of the tree was asked for its parent."""


class EvaluationError(RuntimeError):
    """A nested recursion referenced an index that is not yet available.

    ``n`` is the term being evaluated and ``chain`` the inner indices
    visited before the failure, outermost first.
    """

    def __init__(self, n: int, chain: list[int], message: str = ""):
        self.n = n
        self.chain = list(chain)
        if not message:
            message = f"term {n} is not well-defined: inner chain {self.chain}"
        super().__init__(message)


class InsufficientHorizonError(ValueError):
    """A frequency table is not complete far enough for the request."""
