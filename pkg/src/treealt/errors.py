"""Exception types shared across the engines.

Every error that a caller is expected to branch on gets its own class; the
pair-classification pipeline converts these into Unknown verdicts with a
reason code instead of raising.
"""


class TreealtError(Exception):
    """Base class for all engine errors."""


class ParseError(TreealtError):
    """Input text failed to parse. Carries the offending token and position."""

    def __init__(self, message: str, position: int | None = None, token: str | None = None):
        self.position = position
        self.token = token
        detail = message
        if token is not None:
            detail += f" (token {token!r}"
            detail += f" at position {position})" if position is not None else ")"
        super().__init__(detail)


class BudgetExceeded(TreealtError):
    """expansion-budget-exceeded: a lazy search ran past its node budget."""


class NotElliptic(TreealtError):
    """Operation requires an elliptic element."""


class NotLoxodromic(TreealtError):
    """Operation requires a loxodromic element."""


class UnsupportedWordProblem(TreealtError):
    """The group variant does not support exact normal forms for this input."""


class UnsupportedMembership(TreealtError):
    """No membership or transversal oracle is registered for this subgroup."""


class NoIntersectionOracle(TreealtError):
    """Pointwise stabiliser computation has no oracle for this splitting."""


class NotAStabiliser(TreealtError):
    """Element failed the window check for stabilising a boundary point."""


class CyclicFactDependency(TreealtError):
    """Fact derivation would recurse through its own goal."""
