"""Exception hierarchy shared by every module.

The CLI and the HTTP service map these onto exit codes / error kinds, so new
error types should subclass one of the classes below rather than ValueError.
"""

from __future__ import annotations


class AntiRamseyError(Exception):
    """Base class for all domain errors raised by this package."""

    kind = "domain"


class InvalidParametersError(AntiRamseyError):
    """Arguments violate a documented precondition (bad range, mismatch, ...)."""

    kind = "invalid-parameters"


class WrongUniformityError(InvalidParametersError):
    """An operation defined for 2-graphs was handed an r-graph with r != 2."""

    kind = "wrong-uniformity"


class EdgeNotPresentError(AntiRamseyError):
    """An edge scheduled for removal does not exist in the host."""

    kind = "not-present"


class NotApplicableError(AntiRamseyError):
    """The input is outside the operation's domain (e.g. edgeless graph)."""

    kind = "not-applicable"


class ParseError(AntiRamseyError):
    """Malformed serialized value; carries position info when available."""

    kind = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class BudgetExceededError(AntiRamseyError):
    """An exhaustive search ran out of its node/partition budget.

    Raised instead of returning a possibly-wrong answer; callers may retry
    with a larger explicit budget.
    """

    kind = "budget"

    def __init__(self, message: str, spent: int | None = None):
        self.spent = spent
        super().__init__(message)


class DegenerateConstructionError(AntiRamseyError):
    """A coloring construction would come out with fewer colors than promised."""

    kind = "degenerate-construction"


class PreconditionError(AntiRamseyError):
    """A caller-certified precondition failed on inspection."""

    kind = "precondition"
