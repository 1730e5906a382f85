"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Raised for invalid graph arguments (unknown edge or vertex ids, bad shapes)."""


class ParseError(GraphInputError):
    """Edge-list text could not be parsed.

    ``line`` is the 1-based line number of the offending line, or ``None``
    when the problem is not tied to a single line (e.g. missing header).
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration would exceed its configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: {needed} items exceeds budget {budget}")


class NotConnectedError(GraphInputError):
    """Operation requires a connected graph."""
