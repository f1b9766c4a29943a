"""Exception types shared across the package."""


class SchemaError(ValueError):
    """A document does not match its declared file format."""


class DomainError(ValueError):
    """An operation's precondition or a structural invariant is violated."""


class BudgetExhausted(DomainError):
    """A bounded search ran out of budget before reaching its target."""

    def __init__(self, message: str, best_objective=None):
        super().__init__(message)
        self.best_objective = best_objective
