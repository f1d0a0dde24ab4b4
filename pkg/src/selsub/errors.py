class SelsubError(Exception):
    """Base class for all errors raised by selsub."""


class ParseError(SelsubError):
    """Instance text is not well-formed."""


class ConsistencyError(SelsubError):
    """Instance parses but violates a structural invariant."""


class BudgetExceeded(SelsubError):
    """An exact search ran past its node budget."""

    def __init__(self, budget: int):
        super().__init__(f"exact search exceeded node budget of {budget}")
        self.budget = budget


class GuardExceeded(SelsubError):
    """A brute-force routine was handed an input above its size guard."""
