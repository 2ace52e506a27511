"""Decorators for zig-zag operations."""

import asyncio
from enum import Enum
from functools import wraps
from typing import Any, Callable, ParamSpec, TypeVar

from typer import Exit

from .exceptions import CertificationFailure, ExitCode, ZigzagError
from .logger import logger

# Type variables for generic decorator
P = ParamSpec("P")
R = TypeVar("R")


class ErrorStrategy(Enum):
    """Error handling strategies for zig-zag operations."""

    STRICT = "strict"  # Log and re-raise
    EXIT_CODE = "exit_code"  # Translate to typer.Exit with the mapped code
    RETURN_NONE = "return_none"  # Log and return None


def _exit_code_for(e: Exception) -> ExitCode:
    if isinstance(e, ZigzagError):
        return e.exit_code
    return ExitCode.INVARIANT


def _handle_exceptions(func_name: str, strategy: ErrorStrategy, e: Exception) -> Any:
    """Handle exceptions based on strategy."""
    if isinstance(e, Exit):
        raise e

    if isinstance(e, CertificationFailure):
        logger.error(f"Certification failed in {func_name}: {e}")
    elif isinstance(e, ZigzagError):
        logger.error(f"{type(e).__name__} in {func_name}: {e}")
    else:
        logger.exception(f"Unexpected error in {func_name}: {e}")

    match strategy:
        case ErrorStrategy.EXIT_CODE:
            raise Exit(code=int(_exit_code_for(e))) from e
        case ErrorStrategy.RETURN_NONE:
            return None
        case _:  # STRICT
            raise e


def handle_zigzag_exceptions(
    strategy: ErrorStrategy = ErrorStrategy.STRICT,
) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """
    Flexible decorator for zig-zag operations with configurable exception handling.

    Args:
        strategy: Exception handling strategy to apply
            - STRICT: Re-raise all exceptions (default)
            - EXIT_CODE: Convert to `typer.Exit` using the error's exit code (CLI commands)
            - RETURN_NONE: Return None on any exception (corpus matrix cells)
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        @wraps(func)
        def sync_wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            try:
                return func(*args, **kwargs)
            except Exception as e:
                return _handle_exceptions(func.__name__, strategy, e)  # type: ignore[no-any-return]

        @wraps(func)
        async def async_wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            try:
                return await func(*args, **kwargs)  # type: ignore[misc,no-any-return]
            except Exception as e:
                return _handle_exceptions(func.__name__, strategy, e)  # type: ignore[no-any-return]

        return async_wrapper if asyncio.iscoroutinefunction(func) else sync_wrapper  # type: ignore[return-value]

    return decorator
