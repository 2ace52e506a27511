"""Exception hierarchy for the zig-zag service.

Every error raised by the service derives from `ZigzagError`; the CLI maps
the subclasses to process exit codes through `ExitCode`.
"""

from __future__ import annotations

from enum import IntEnum
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..core.chase import Counterexample


class ExitCode(IntEnum):
    SUCCESS = 0
    USAGE = 1
    CERTIFICATION = 2
    INVARIANT = 3


class ZigzagError(Exception):
    """Base class for all service errors."""

    exit_code: ExitCode = ExitCode.INVARIANT


class UsageError(ZigzagError):
    """A request that cannot be honoured as stated (bad flags, unknown names)."""

    exit_code = ExitCode.USAGE


class ParseError(ZigzagError):
    """Malformed complex or cover file."""

    exit_code = ExitCode.USAGE

    def __init__(self, message: str, path: Path | str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")


class ChainError(ZigzagError, ValueError):
    """Degree or support misuse of a chain, cochain or Čech element."""

    exit_code = ExitCode.USAGE


class ComplexError(ZigzagError, ValueError):
    """Malformed simplicial complex or unknown vertex."""

    exit_code = ExitCode.USAGE


class CoverError(ZigzagError, ValueError):
    """Cover that cannot be turned into a saturated cover datum."""

    exit_code = ExitCode.USAGE


class InvariantViolation(ZigzagError):
    """An algebraic identity or axiom that must hold did not."""

    exit_code = ExitCode.INVARIANT


class ChainComplexError(InvariantViolation):
    """Matrices that do not compose to zero."""


class CertificationFailure(ZigzagError):
    """No integral coboundary witness exists for a chased/evaluated pair."""

    exit_code = ExitCode.CERTIFICATION

    def __init__(self, message: str, counterexample: Counterexample | None = None):
        self.counterexample = counterexample
        super().__init__(message)
