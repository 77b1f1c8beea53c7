"""Exception types shared across the toolkit."""

from __future__ import annotations


class ObnError(Exception):
    """Base class for toolkit errors."""


class Graph6Error(ObnError, ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(ObnError, ValueError):
    pass


class PreconditionError(ObnError, ValueError):
    """An operation was called outside its documented domain."""


class BudgetExceeded(ObnError):
    """Instance too large for an exact method.

    ``partial`` carries whatever was computed before giving up (for the OBN
    solver this is the bracket), so callers can still report something.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
