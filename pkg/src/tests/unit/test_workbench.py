from pathlib import Path

import pytest
from app.core.settings import Settings
from app.services.zigzag import ZigzagWorkbench
from app.services.zigzag.common.exceptions import UsageError
from app.services.zigzag.core.zint import AbelianGroupInvariants
from app.services.zigzag.models.chase_settings import ChaseSettings

Z = AbelianGroupInvariants(1)


@pytest.mark.unit
def test_complex_entries_use_the_star_cover(workbench: ZigzagWorkbench) -> None:
    ws = workbench.workspace("triangle")
    assert ws.name == "triangle"
    assert ws.space is not None
    assert ws.original is None
    assert not ws.restricted
    assert ws.datum.indices == ("a", "b", "c", "a.b", "a.c", "b.c")
    assert workbench.degrees(ws) == [0, 1]


@pytest.mark.unit
def test_cover_entries_are_saturated(workbench: ZigzagWorkbench) -> None:
    ws = workbench.workspace("three-arc")
    assert ws.restricted
    assert ws.base_nerve.f_vector() == (3, 3)
    assert ws.datum.nerve.f_vector() == (6, 9, 3)
    assert workbench.degrees(ws) == [0, 1]


@pytest.mark.unit
def test_groups_agree_on_the_circle(workbench: ZigzagWorkbench) -> None:
    groups = workbench.groups(workbench.workspace("triangle"), 1)
    assert (groups.cech, groups.nerve, groups.space) == (Z, Z, Z)
    assert groups.generators == 1

    cover_groups = workbench.groups(workbench.workspace("three-arc"), 1)
    assert cover_groups.space is None
    assert cover_groups.cech == cover_groups.nerve == Z


@pytest.mark.unit
def test_chase_and_certify(workbench: ZigzagWorkbench) -> None:
    ws = workbench.workspace("triangle")
    (result,) = workbench.chase(ws, 1)
    assert result.order == 0
    assert result.evaluated.cochain == -result.alpha

    (certificate,) = workbench.certify(ws, 1)
    assert certificate.sign == -1


@pytest.mark.unit
def test_literal_covers_are_certified_on_the_original_nerve(workbench: ZigzagWorkbench) -> None:
    ws = workbench.workspace("three-arc")
    (certificate,) = workbench.certify(ws, 1)
    assert certificate.chased.nerve == ws.base_nerve


@pytest.mark.unit
def test_star_cover_directive_loads_the_named_complex(workbench: ZigzagWorkbench, tmp_path: Path) -> None:
    path = tmp_path / "circle-star.cover"
    path.write_text("starcover of triangle\n", encoding="utf-8")
    ws = workbench.workspace(str(path))
    assert ws.name == "circle-star"
    assert ws.space is not None
    assert ws.space.labels == ("a", "b", "c")

    bad = tmp_path / "bad-star.cover"
    bad.write_text("starcover of three-arc\n", encoding="utf-8")
    with pytest.raises(UsageError):
        workbench.workspace(str(bad))


@pytest.mark.unit
def test_unknown_inputs_and_degrees(workbench: ZigzagWorkbench) -> None:
    with pytest.raises(UsageError):
        workbench.resolve("no-such-entry")
    ws = workbench.workspace("triangle")
    with pytest.raises(UsageError):
        workbench.groups(ws, -1)
    assert workbench.degrees(ws, 0) == [0]


@pytest.mark.unit
def test_degrees_past_the_cap_and_the_dimension(workbench: ZigzagWorkbench) -> None:
    ws = workbench.workspace("triangle")
    assert workbench.degrees(ws) == [0, 1]
    k = workbench.settings.chase.MAX_DEGREE + 1
    assert workbench.degrees(ws, k) == [k]
    groups = workbench.groups(ws, k)
    assert groups.cech == AbelianGroupInvariants()
    assert groups.nerve == groups.cech
    assert groups.generators == 0
    assert workbench.chase(ws, k) == []
    assert workbench.certify(ws, k) == []


@pytest.mark.unit
def test_oracle_is_capped_by_max_degree() -> None:
    settings = Settings(chase=ChaseSettings(MAX_DEGREE=1, ORACLE_MAX_DIMENSION=3))
    assert ZigzagWorkbench(settings).oracle_max_dimension == 1


@pytest.mark.unit
def test_missing_corpus_directory(tmp_path: Path) -> None:
    workbench = ZigzagWorkbench(Settings(CORPUS_DIR=tmp_path / "missing"))
    with pytest.raises(UsageError):
        workbench.corpus_files()


@pytest.mark.unit
def test_bundled_corpus_lists_every_entry(workbench: ZigzagWorkbench) -> None:
    names = [p.stem for p in workbench.corpus_files()]
    assert names == sorted(names)
    assert {"triangle", "torus", "rp2", "three-arc", "nested-pair"} <= set(names)
