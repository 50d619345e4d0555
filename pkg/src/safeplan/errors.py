"""Exception types shared across the harness."""

from __future__ import annotations


class SafeplanError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SafeplanError):
    """A file or source text could not be parsed."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}:{col if col is not None else 0}: {message}"
        super().__init__(message)


class LexError(ParseError):
    """Tokenizer-level failure (bad indentation, unterminated string)."""


class ValidationError(SafeplanError):
    """A task or config file violates a structural invariant."""


class RenderError(SafeplanError):
    """A scenario description is missing its SCENE or INSTRUCTION section."""


class TemplateError(SafeplanError):
    """A prompt template names a slot the request did not provide."""


class HttpError(SafeplanError):
    """The chat-completion endpoint failed or returned garbage."""


class PoolExhausted(SafeplanError):
    """The mock scenario pool has no template left outside the history."""


class EmptyInput(SafeplanError):
    """An aggregation was asked to summarize zero records."""


class IoError(SafeplanError):
    """A report or trace file could not be written."""
