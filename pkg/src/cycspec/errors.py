"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument is outside a function's mathematical domain.

    Examples: gcd(n, q) != 1 where distinct roots of unity are required,
    a modulus of 0, a value that does not fit in 64 bits, or a formula
    invoked outside its hypotheses.
    """


class BudgetError(RuntimeError):
    """Raised when a computation would exceed its configured size budget.

    These refusals happen before any large allocation so the caller can
    fall back to a cheaper method or raise the budget deliberately.
    """
