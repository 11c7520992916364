"""Exceptions shared across modules; the CLI maps each to an exit code."""


class InvalidQuadCode(ValueError):
    """A code has an odd-weight word or a nonzero word of weight below 4."""


class InfeasibleDeck(ValueError):
    """The requested deck is too small to realize the code (n < l - k - 1)."""


class InvalidDistribution(ValueError):
    """A weight distribution cannot belong to any linear code."""

    def __init__(self, message, coefficients=None):
        super().__init__(message)
        self.coefficients = coefficients


class BudgetExceeded(RuntimeError):
    """The requested computation is outside the exact enumeration budget."""
