"""Exceptions shared by the search modules."""


class BudgetExhausted(RuntimeError):
    """An enumeration cap was hit before the question was decided.

    Never a verdict: callers must not read it as "no good pair".
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InternalInconsistency(AssertionError):
    """A structural guarantee the search relies on did not hold."""
