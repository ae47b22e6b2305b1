"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LeakyForcingError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(LeakyForcingError, ValueError):
    """Malformed graph text. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SelfLoopError(GraphParseError):
    pass


class DomainError(LeakyForcingError, ValueError):
    """A parameter lies outside the domain of the requested operation."""


class NotFoundError(LeakyForcingError, KeyError):
    """A vertex or edge that does not exist in the graph."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class NotUnicyclicError(DomainError):
    pass


class NotCoveredError(LeakyForcingError):
    """No closed form is known for the requested (family, leaks) pair."""


class ResourceError(LeakyForcingError):
    """A computation exceeded its size cap or time budget.

    ``lower`` and ``upper`` bracket the true value when the solver knows them;
    ``best`` is the best forcing set found so far.
    """

    def __init__(self, message: str, lower: int | None = None,
                 upper: int | None = None, best: frozenset[int] | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.best = best


class CaseMismatchError(LeakyForcingError):
    """A case table failed to classify an input (should never happen)."""
