"""
errors.py — Exception Hierarchy
================================
Every failure the prover can raise derives from MatchboxError so the CLI
and the HTTP layer can map whole families to exit codes / status codes:

    InputError   → exit 2 / HTTP 400   (bad SRS text, bad certificate JSON)
    EngineError  → exit 3 / HTTP 500   (internal invariant broken)
    QueryError   → raised for queries outside the registered word set

Hitting a limit is NOT an error; completion reports it as an outcome.
"""

from typing import Optional


class MatchboxError(Exception):
    """Root of every error raised by this package."""


class InputError(MatchboxError, ValueError):
    """User-supplied data could not be accepted."""


class SrsParseError(InputError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}{message}")


class CertificateFormatError(InputError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line   = line
        self.column = column
        where = f"line {line} column {column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class EngineError(MatchboxError, RuntimeError):
    """An internal invariant was violated; never caused by user input alone."""


class QueryError(MatchboxError, KeyError):
    """A query word was not registered when the automaton was built."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unregistered query word"
