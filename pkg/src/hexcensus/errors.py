"""Shared exception types."""


class BudgetError(RuntimeError):
    """A brute-force computation would exceed its configured size budget."""
