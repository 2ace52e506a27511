import pytest
from app.services.zigzag.common import (
    CertificationFailure,
    ChainError,
    ErrorStrategy,
    ExitCode,
    InvariantViolation,
    handle_zigzag_exceptions,
)
from typer import Exit


def _raiser(exc: Exception, strategy: ErrorStrategy):  # type: ignore[no-untyped-def]
    @handle_zigzag_exceptions(strategy)
    def operation() -> int:
        raise exc

    return operation


@pytest.mark.unit
def test_strict_reraises() -> None:
    with pytest.raises(ChainError):
        _raiser(ChainError("bad degree"), ErrorStrategy.STRICT)()


@pytest.mark.unit
def test_return_none_swallows() -> None:
    assert _raiser(InvariantViolation("broken"), ErrorStrategy.RETURN_NONE)() is None


@pytest.mark.unit
@pytest.mark.parametrize(
    "exc, code",
    [
        (ChainError("bad degree"), ExitCode.USAGE),
        (CertificationFailure("no witness"), ExitCode.CERTIFICATION),
        (InvariantViolation("broken"), ExitCode.INVARIANT),
        (RuntimeError("unexpected"), ExitCode.INVARIANT),
    ],
)
def test_exit_code_strategy_maps_errors(exc: Exception, code: ExitCode) -> None:
    with pytest.raises(Exit) as info:
        _raiser(exc, ErrorStrategy.EXIT_CODE)()
    assert info.value.exit_code == int(code)


@pytest.mark.unit
def test_exit_passes_through_unchanged() -> None:
    with pytest.raises(Exit) as info:
        _raiser(Exit(code=0), ErrorStrategy.RETURN_NONE)()
    assert info.value.exit_code == 0


@pytest.mark.unit
def test_successful_calls_return_their_value() -> None:
    @handle_zigzag_exceptions(ErrorStrategy.RETURN_NONE)
    def answer() -> int:
        return 42

    assert answer() == 42


@pytest.mark.unit
@pytest.mark.asyncio
async def test_async_functions_are_wrapped() -> None:
    @handle_zigzag_exceptions(ErrorStrategy.RETURN_NONE)
    async def failing() -> int:
        raise InvariantViolation("broken")

    assert await failing() is None
