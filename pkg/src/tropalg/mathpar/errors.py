"""Errors raised while lexing, parsing or evaluating scripts."""

from __future__ import annotations

from ..errors import TropalgError

__all__ = [
    "MathparError",
    "LexError",
    "ParseError",
    "EvalError",
    "UnknownSpace",
    "UnknownCommand",
    "ArityError",
]


class MathparError(TropalgError):
    """Base for script errors; carries a 1-based source position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self) -> str:
        if self.line:
            return f"{self.line}:{self.col}: {self.message}"
        return self.message


class LexError(MathparError):
    pass


class ParseError(MathparError):
    pass


class EvalError(MathparError):
    pass


class UnknownSpace(EvalError):
    pass


class UnknownCommand(EvalError):
    pass


class ArityError(EvalError):
    pass
