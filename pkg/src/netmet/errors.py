"""Exceptions shared across the package."""


class BudgetError(ValueError):
    """An operation would exceed its combinatorial budget.

    Raised instead of silently attempting an enumeration or search whose
    size grows exponentially; the message names the budget so callers can
    raise it deliberately or fall back to bounds.
    """


class ParseError(ValueError):
    """A network document failed to parse; carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + location)
        self.line = line
        self.column = column
