import sys
from pathlib import Path

import pytest
from app.__main__ import main
from app.cli.main import create_application
from pytest_mock import MockerFixture
from typer import Typer
from typer.testing import CliRunner

from tests.conftest import copy_corpus_entries

runner = CliRunner()


@pytest.fixture
def cli(clean_settings_cache: None) -> Typer:
    return create_application()


@pytest.mark.integration
def test_version_comes_from_settings(cli: Typer, mocker: MockerFixture) -> None:
    mocker.patch("app.core.settings.version", return_value="9.9.9")
    mocker.patch("app.core.settings.metadata", return_value={"Summary": "Cech zig-zag certificates "})
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == ["cech-zigzag v9.9.9", "Cech zig-zag certificates"]


@pytest.mark.integration
def test_nerve_of_a_literal_cover(cli: Typer) -> None:
    result = runner.invoke(cli, ["nerve", "three-arc"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == [
        "nerve of three-arc: dimension 1, f-vector (3, 3)",
        "  dim 0: (x_A) (x_B) (x_C)",
        "  dim 1: (x_A x_B) (x_A x_C) (x_B x_C)",
    ]


@pytest.mark.integration
def test_saturate_shows_the_order(cli: Typer) -> None:
    result = runner.invoke(cli, ["saturate", "nested-pair"])
    assert result.exit_code == 0, result.output
    assert "  added: left&right" in result.stdout
    assert "  order: left right left&right core" in result.stdout


@pytest.mark.integration
def test_saturate_records(cli: Typer) -> None:
    result = runner.invoke(cli, ["--format", "records", "saturate", "three-arc"])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == (
        "type=saturation name=three-arc original=A,B,C added=A&B,A&C,B&C order=A,B,C,A&B,A&C,B&C"
    )


@pytest.mark.integration
def test_cohomology_records(cli: Typer) -> None:
    result = runner.invoke(cli, ["-f", "records", "cohomology", "triangle", "-k", "1"])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "type=cohomology name=triangle degree=1 cech=Z nerve=Z space=Z generators=1"


@pytest.mark.integration
def test_cohomology_of_every_degree(cli: Typer) -> None:
    result = runner.invoke(cli, ["cohomology", "three-arc"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == [
        "H^0(three-arc): Čech Z, nerve Z [1 generators]",
        "H^1(three-arc): Čech Z, nerve Z [1 generators]",
    ]


@pytest.mark.integration
def test_chase_prints_each_generator(cli: Typer) -> None:
    result = runner.invoke(cli, ["chase", "triangle", "--degree", "1"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "generator 0 of H^1(triangle) [free]"
    assert lines[1].startswith("  alpha:")


@pytest.mark.integration
def test_certify_passes(cli: Typer) -> None:
    result = runner.invoke(cli, ["certify", "triangle", "-k", "1"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "generator 0 of H^1(triangle): pass (sign -1)"


@pytest.mark.integration
def test_certify_without_generators(cli: Typer) -> None:
    result = runner.invoke(cli, ["certify", "triangle", "-k", "2"])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "H^2(triangle): no generators"


@pytest.mark.integration
def test_certification_failure_exits_with_two(cli: Typer, mocker: MockerFixture) -> None:
    mocker.patch("app.services.zigzag.core.chase.find_witness", return_value=None)
    result = runner.invoke(cli, ["certify", "triangle", "-k", "1"])
    assert result.exit_code == 2
    assert "datum=triangle k=1" in result.stdout


@pytest.mark.integration
@pytest.mark.parametrize(
    "args",
    [
        ["cohomology", "no-such-entry"],
        ["certify", "no-such-entry", "-k", "1"],
    ],
)
def test_usage_errors_exit_with_one(cli: Typer, args: list[str]) -> None:
    assert runner.invoke(cli, args).exit_code == 1


@pytest.mark.integration
def test_degrees_above_the_dimension_are_vacuous(cli: Typer) -> None:
    result = runner.invoke(cli, ["-f", "records", "cohomology", "triangle", "-k", "99"])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "type=cohomology name=triangle degree=99 cech=0 nerve=0 space=0 generators=0"

    result = runner.invoke(cli, ["certify", "triangle", "-k", "99"])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "H^99(triangle): no generators"


@pytest.mark.integration
def test_malformed_file_exits_with_one(cli: Typer, tmp_path: Path) -> None:
    bad = tmp_path / "bad.complex"
    bad.write_text("vertices: a b\nsimplices:\na z\n", encoding="utf-8")
    assert runner.invoke(cli, ["nerve", str(bad)]).exit_code == 1


@pytest.mark.integration
def test_corpus_on_a_small_directory(
    cli: Typer, small_checks_env: None, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> None:
    monkeypatch.setenv("CORPUS_DIR", str(copy_corpus_entries(tmp_path, "triangle", "three-arc")))
    result = runner.invoke(cli, ["--format", "records", "corpus"])
    assert result.exit_code == 0, result.output
    assert 'type=check space=- check="smith form" status=pass' in result.stdout
    assert "type=corpus space=triangle degree=1 cech=Z nerve=Z space_group=Z certificates=1/1" in result.stdout
    assert "type=corpus space=three-arc degree=1 cech=Z nerve=Z space_group=- certificates=1/1" in result.stdout


@pytest.mark.integration
def test_corpus_tables(cli: Typer, small_checks_env: None, monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("CORPUS_DIR", str(copy_corpus_entries(tmp_path, "triangle")))
    result = runner.invoke(cli, ["corpus"])
    assert result.exit_code == 0, result.output
    assert "Corpus" in result.stdout
    assert "cone lemma" in result.stdout


@pytest.mark.integration
def test_corpus_certification_failure_exits_with_two(
    cli: Typer, small_checks_env: None, monkeypatch: pytest.MonkeyPatch, tmp_path: Path, mocker: MockerFixture
) -> None:
    monkeypatch.setenv("CORPUS_DIR", str(copy_corpus_entries(tmp_path, "triangle")))
    mocker.patch("app.services.zigzag.core.chase.find_witness", return_value=None)
    assert runner.invoke(cli, ["-f", "records", "corpus"]).exit_code == 2


@pytest.mark.integration
def test_main_maps_exit_codes(monkeypatch: pytest.MonkeyPatch, clean_settings_cache: None) -> None:
    monkeypatch.setattr(sys, "argv", ["cech-zigzag", "nerve", "triangle"])
    main()

    monkeypatch.setattr(sys, "argv", ["cech-zigzag", "cohomology", "no-such-entry"])
    with pytest.raises(SystemExit) as info:
        main()
    assert info.value.code == 1

    # Click's own usage errors are reported as 1, not 2
    monkeypatch.setattr(sys, "argv", ["cech-zigzag", "nerve"])
    with pytest.raises(SystemExit) as info:
        main()
    assert info.value.code == 1
