"""Exception types shared by the engine and the command line."""


class DerivantError(Exception):
    """Base class for engine errors."""


class DegreeMismatchError(DerivantError, ValueError):
    pass


class ParseError(DerivantError, ValueError):
    """Malformed group spec or cycle text; carries an optional location."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)


class BudgetExceeded(DerivantError):
    """An operation would exceed a configured size budget.

    Raised instead of returning an answer that might be wrong; integrability
    turns it into an Inconclusive verdict.
    """

    def __init__(self, what: str, needed, budget):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"budget exceeded: {what} needs {needed}, budget {budget}")


class NotASubgroupError(DerivantError, ValueError):
    pass


class NotNormalError(DerivantError, ValueError):
    pass


class NoStrategyError(BudgetExceeded):
    """No normalizer strategy applies within budget."""

    def __init__(self, message: str):
        DerivantError.__init__(self, message)
        self.what = "normalizer"
        self.needed = None
        self.budget = None
