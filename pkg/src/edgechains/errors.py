"""Exception types shared across the package."""


class ChainSpecError(ValueError):
    """A chain-spec document or seed violates the format or its invariants."""


class BudgetExceededError(RuntimeError):
    """A configured search or enumeration budget was exhausted."""
