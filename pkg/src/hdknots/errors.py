"""Exception types shared across the package."""

from __future__ import annotations


class HDKnotsError(Exception):
    """Base class for all errors raised by hdknots."""


class ValidationError(HDKnotsError, ValueError):
    """Input data violates a structural invariant (asymmetric form, bad sizes...)."""


class PreconditionError(HDKnotsError, ValueError):
    """An operation was called outside the hypotheses under which it is defined."""


class UnsupportedError(HDKnotsError):
    """The requested computation is not supported for this input."""


class ParseError(HDKnotsError, ValueError):
    """Syntax or semantic error in a text format, with a 1-based source position."""

    def __init__(self, message: str, line: int, column: int, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        super().__init__(str(self))

    def __str__(self) -> str:
        text = f"line {self.line}, column {self.column}: {self.message}"
        if self.expected:
            text += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        return text
