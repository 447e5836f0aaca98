# faht/core/errors.py
"""Error types raised across the toolkit.

All of them are ``ValueError`` subclasses so callers that only care about
"bad input" can keep catching ``ValueError``.
"""

from typing import Optional


class SchemaError(ValueError):
    """An instance or configuration does not agree with the stream schema."""


class CommunityError(ValueError):
    """An instance cannot be assigned to one of DR, DG, FR, FG."""


class InvariantError(ValueError):
    """Inputs violate a structural invariant (e.g. partition totals)."""


class PreconditionError(ValueError):
    """A function was called outside its domain."""


class UndefinedStatisticError(ValueError):
    """A statistic has no defined value for the given data."""


class DataParseError(ValueError):
    """A dataset file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.path = path
        where = ""
        if path:
            where += f"{path}"
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class ChecksumError(ValueError):
    """Downloaded content does not match its pinned SHA-256 digest."""
