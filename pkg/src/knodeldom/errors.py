"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """A parameter or argument violates an operation's contract."""


class ResourceLimitError(RuntimeError):
    """A size guard or node budget stopped a computation before completion.

    ``lower_bound``/``upper_bound`` carry the best bounds known at the point
    the search was cut off (``None`` when not applicable).
    """

    def __init__(self, message, lower_bound=None, upper_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
