"""Exception hierarchy shared by every module."""

from typing import Optional


class DeltaBoundError(Exception):
    """Base class for all library errors."""

    exit_code: int = 1


class DomainError(DeltaBoundError, ValueError):
    """A precondition of an operation was violated."""

    exit_code = 1


class CertificateError(DomainError):
    """A certificate failed its exact arithmetic check."""

    def __init__(self, message: str, residual: Optional[str] = None):
        super().__init__(message if residual is None else f"{message}: residual {residual}")
        self.residual = residual


class ParseError(DomainError):
    """Malformed model or polynomial input, with 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class ResourceLimitError(DeltaBoundError, RuntimeError):
    """A configured resource cap would be exceeded."""

    exit_code = 3
