from pathlib import Path

import pytest
from app.common.getenv import getenv
from app.models import RunConfig
from app.services.zigzag.models import Command, OutputFormat
from pydantic import ValidationError


@pytest.mark.unit
def test_run_config_defaults() -> None:
    config = RunConfig(command=Command.COHOMOLOGY, input="torus")
    assert config.degree is None
    assert config.output_format is OutputFormat.HUMAN
    assert config.seed == 0


@pytest.mark.unit
@pytest.mark.parametrize(
    "fields",
    [
        {"command": Command.NERVE},
        {"command": Command.CORPUS, "input": "torus"},
        {"command": Command.NERVE, "input": "torus", "degree": 1},
        {"command": Command.CHASE, "input": "torus", "degree": -1},
    ],
)
def test_run_config_rejects_inconsistent_flags(fields: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        RunConfig(**fields)  # type: ignore[arg-type]


@pytest.mark.unit
def test_corpus_takes_no_input() -> None:
    assert RunConfig(command=Command.CORPUS).input is None


@pytest.mark.unit
def test_getenv_wrapper(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ZIGZAG_TEST_LEVEL", " debug ")
    monkeypatch.setenv("ZIGZAG_TEST_EMPTY", "  ")
    assert getenv("ZIGZAG_TEST_LEVEL").as_upper("INFO") == "DEBUG"
    assert not getenv("ZIGZAG_TEST_EMPTY").is_set()
    assert getenv("ZIGZAG_TEST_EMPTY").as_upper("INFO") == "INFO"
    assert getenv("ZIGZAG_TEST_MISSING", "x").value == "x"
    assert str(getenv("ZIGZAG_TEST_UNSET")) == ""
    assert getenv("ZIGZAG_TEST_EMPTY").as_path() is None


@pytest.mark.unit
def test_getenv_path_expands_home(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("ZIGZAG_TEST_DIR", "~/corpus ")
    assert getenv("ZIGZAG_TEST_DIR").as_path() == tmp_path / "corpus"
