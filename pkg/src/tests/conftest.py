"""Pytest configuration file."""

from collections.abc import Generator
from pathlib import Path
from shutil import which
from typing import Any, Callable

import pytest
from app.core.settings import Settings
from app.dependencies import get_settings
from app.services.zigzag import ZigzagWorkbench
from app.services.zigzag._workbench import BUNDLED_CORPUS
from app.services.zigzag.core.cover import GroundSetCover, SaturatedCoverDatum, saturate, star_cover
from app.services.zigzag.core.simplicial import SimplicialComplex
from pytest import MonkeyPatch


def pytest_configure(config: Any) -> None:
    """Configure pytest."""
    # No-op


# ==============================================================================
# COMPLEXES
# ==============================================================================


@pytest.fixture
def triangle() -> SimplicialComplex:
    """Boundary of a triangle: a circle."""
    return SimplicialComplex(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def solid_triangle() -> SimplicialComplex:
    return SimplicialComplex(["a", "b", "c"], [("a", "b", "c")])


@pytest.fixture
def tetrahedron() -> SimplicialComplex:
    return SimplicialComplex(["a", "b", "c", "d"], [("a", "b", "c", "d")])


@pytest.fixture
def rp2() -> SimplicialComplex:
    """Six-vertex real projective plane."""
    faces = [
        "123", "134", "145", "156", "126", "235", "346", "245", "356", "246",
    ]  # fmt: skip
    return SimplicialComplex(list("123456"), [tuple(face) for face in faces])


@pytest.fixture
def torus() -> SimplicialComplex:
    """Seven-vertex torus."""
    faces = []
    for i in range(7):
        faces.append((str(i), str((i + 1) % 7), str((i + 3) % 7)))
        faces.append((str(i), str((i + 2) % 7), str((i + 3) % 7)))
    return SimplicialComplex([str(i) for i in range(7)], faces)


# ==============================================================================
# COVERS
# ==============================================================================


@pytest.fixture
def three_arc() -> GroundSetCover:
    return GroundSetCover.of(
        "123456",
        [("A", "123"), ("B", "345"), ("C", "561")],
    )


@pytest.fixture
def nested_pair() -> GroundSetCover:
    return GroundSetCover.of(
        "12345",
        [("left", "1234"), ("right", "345"), ("core", "3")],
    )


@pytest.fixture
def triangle_datum(triangle: SimplicialComplex) -> SaturatedCoverDatum:
    return star_cover(triangle, name="triangle")


@pytest.fixture
def three_arc_datum(three_arc: GroundSetCover) -> SaturatedCoverDatum:
    _, datum = saturate(three_arc, name="three-arc")
    return datum


# ==============================================================================
# SETTINGS AND WORKBENCH
# ==============================================================================


@pytest.fixture
def clean_settings_cache() -> Generator[None, None, None]:
    """Drop the cached settings so env changes made by a test take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def small_checks_env(monkeypatch: MonkeyPatch, clean_settings_cache: None) -> None:
    """Settings sized for fast acceptance runs."""
    monkeypatch.setenv("CHECKS__RANDOM_SAMPLES", "5")
    monkeypatch.setenv("CHECKS__EXACTNESS_MAX_TOTAL_DEGREE", "2")
    monkeypatch.setenv("CHASE__ORACLE_MAX_DIMENSION", "2")


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def workbench(settings: Settings) -> ZigzagWorkbench:
    return ZigzagWorkbench(settings)


def copy_corpus_entries(target: Path, *names: str) -> Path:
    """Copy bundled corpus entries into ``target`` and return it."""
    for name in names:
        source = next(p for p in BUNDLED_CORPUS.iterdir() if p.stem == name)
        (target / source.name).write_text(source.read_text(encoding="utf-8"), encoding="utf-8")
    return target


def create_cmd_fixture(name: str) -> Callable[[], str]:
    @pytest.fixture(name=name + "_path")
    def _fixture() -> str:
        path = which(name)
        if path is None:
            pytest.skip(f"{name} is not installed")
        return path

    return _fixture


uv_path = create_cmd_fixture("uv")
uvx_path = create_cmd_fixture("uvx")
