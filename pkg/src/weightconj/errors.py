"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class WeightConjError(Exception):
    """Base class for every error raised by the package."""


class InvalidSequence(WeightConjError, ValueError):
    """Sequence data or a construction precondition is not acceptable."""


class DegenerateSequence(WeightConjError, ValueError):
    """The operation is undefined for a degenerate sequence (M_p = 0 for p > 0)."""


class RangeExceeded(WeightConjError, IndexError):
    """A request needs quotient data beyond the stored truncation depth."""


class NotSubordinate(WeightConjError, ValueError):
    """The subordination hypothesis required by the upper conjugate fails."""


class NonNormalizedDivisor(WeightConjError, ValueError):
    """The divisor of an upper conjugate does not vanish at the origin."""


class ExpressionError(WeightConjError, ValueError):
    """A weight-function expression could not be parsed."""
