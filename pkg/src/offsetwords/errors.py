"""Exceptions shared across the package."""


class BudgetExceededError(Exception):
    """An enumeration or expansion was refused because it exceeds a configured cap.

    Raised instead of silently truncating; the CLI maps this to exit code 3.
    """


class StabilityError(ValueError):
    """Evaluation requested outside the strong stability region |x| < 1/d."""
