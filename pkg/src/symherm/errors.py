"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SymHermError(Exception):
    """Base class for all errors raised by symherm."""


class VariableSetMismatch(SymHermError, ValueError):
    def __init__(self, msg: str = "variable-set mismatch"):
        super().__init__(msg)


class ParseError(SymHermError, ValueError):
    """Malformed polynomial or node text. ``pos`` is a 0-based character offset."""

    def __init__(self, msg: str, pos: int | None = None, text: str | None = None):
        self.msg = msg
        self.pos = pos
        self.text = text
        where = "" if pos is None else f" at position {pos}"
        super().__init__(f"{msg}{where}")


class PreconditionError(SymHermError, ValueError):
    """An operation was called outside the domain where its result is defined."""


class InexactDivisionError(SymHermError, ArithmeticError):
    """A division that must be exact left a nonzero remainder."""
