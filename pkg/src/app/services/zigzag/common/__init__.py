from .decorators import ErrorStrategy, handle_zigzag_exceptions
from .exceptions import (
    CertificationFailure,
    ChainComplexError,
    ChainError,
    ComplexError,
    CoverError,
    ExitCode,
    InvariantViolation,
    ParseError,
    UsageError,
    ZigzagError,
)
from .logger import logger

__all__ = [
    "CertificationFailure",
    "ChainComplexError",
    "ChainError",
    "ComplexError",
    "CoverError",
    "ErrorStrategy",
    "ExitCode",
    "InvariantViolation",
    "ParseError",
    "UsageError",
    "ZigzagError",
    "handle_zigzag_exceptions",
    "logger",
]
