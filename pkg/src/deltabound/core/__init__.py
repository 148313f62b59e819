"""Core orchestration, errors and logging."""

from deltabound.core.errors import (
    CertificateError,
    DeltaBoundError,
    DomainError,
    ParseError,
    ResourceLimitError,
)

__all__ = [
    "CertificateError",
    "DeltaBoundError",
    "DomainError",
    "ParseError",
    "ResourceLimitError",
]
