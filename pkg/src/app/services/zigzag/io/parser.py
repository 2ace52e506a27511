"""
Plain-text formats for complexes and covers.

Complex files::

    name: circle
    vertices: a b c
    simplices:
    a b
    b c
    a c

Vertex order is the listed order. Simplex lines list maximal simplices; a
single simplex may also follow ``simplices:`` on the same line.

Cover files::

    name: three-arc
    ground: 1 2 3 4 5 6
    member A: 1 2 3
    member B: 3 4 5

or the single directive ``starcover of <complex>``. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..common.exceptions import ComplexError, CoverError, ParseError
from ..core.cover import GroundSetCover
from ..core.simplicial import SimplicialComplex

_KEY = re.compile(r"^(?P<key>name|vertices|simplices|ground)\s*:\s*(?P<rest>.*)$")
_MEMBER = re.compile(r"^member\s+(?P<label>[^\s:]+)\s*:\s*(?P<rest>.*)$")
_STAR = re.compile(r"^starcover\s+of\s+(?P<target>\S+)$")


@dataclass(frozen=True)
class ComplexDocument:
    name: str
    complex: SimplicialComplex
    path: Path | None = None


@dataclass(frozen=True)
class CoverDocument:
    """A literal ground-set cover, or a request for the star cover of a complex."""

    name: str
    cover: GroundSetCover | None = None
    star_of: str | None = None
    path: Path | None = None


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def parse_complex(text: str, path: Path | str | None = None) -> ComplexDocument:
    """Raises ParseError with the offending line on malformed input."""
    name = Path(path).stem if path else ""
    vertices: list[str] | None = None
    simplices: list[tuple[int, list[str]]] = []
    in_simplices = False

    for number, line in _lines(text):
        match = _KEY.match(line)
        if match is None:
            if not in_simplices:
                raise ParseError(f"unexpected line {line!r}", path, number)
            simplices.append((number, line.split()))
            continue
        key, rest = match["key"], match["rest"].strip()
        in_simplices = key == "simplices"
        if key == "name":
            name = rest
        elif key == "vertices":
            if vertices is not None:
                raise ParseError("vertices declared twice", path, number)
            vertices = rest.split()
        elif key == "simplices" and rest:
            simplices.append((number, rest.split()))
        elif key == "ground":
            raise ParseError("'ground:' belongs to cover files", path, number)

    if vertices is None:
        raise ParseError("missing 'vertices:' line", path)
    known = set(vertices)
    for number, labels in simplices:
        unknown = [v for v in labels if v not in known]
        if unknown:
            raise ParseError(f"unknown vertices {unknown}", path, number)
    try:
        complex = SimplicialComplex.from_maximal(vertices, (labels for _, labels in simplices))
    except ComplexError as e:
        raise ParseError(str(e), path) from e
    return ComplexDocument(name, complex, Path(path) if path else None)


def parse_cover(text: str, path: Path | str | None = None) -> CoverDocument:
    """Raises ParseError with the offending line on malformed input."""
    name = Path(path).stem if path else ""
    ground: list[str] | None = None
    members: list[tuple[str, list[str]]] = []
    star_of: str | None = None

    for number, line in _lines(text):
        if star := _STAR.match(line):
            star_of = star["target"]
        elif member := _MEMBER.match(line):
            elements = member["rest"].split()
            if ground is not None:
                outside = [e for e in elements if e not in set(ground)]
                if outside:
                    message = f"member {member['label']!r} uses elements outside the ground set: {outside}"
                    raise ParseError(message, path, number)
            members.append((member["label"], elements))
        elif (key := _KEY.match(line)) and key["key"] in ("name", "ground"):
            if key["key"] == "name":
                name = key["rest"].strip()
            else:
                ground = key["rest"].split()
        else:
            raise ParseError(f"unexpected line {line!r}", path, number)

    location = Path(path) if path else None
    if star_of is not None:
        if ground is not None or members:
            raise ParseError("'starcover of' cannot be combined with ground or members", path)
        return CoverDocument(name or f"star-{star_of}", star_of=star_of, path=location)
    if ground is None:
        raise ParseError("missing 'ground:' line", path)
    if not members:
        raise ParseError("a cover needs at least one 'member' line", path)
    try:
        cover = GroundSetCover.of(ground, members)
    except CoverError as e:
        raise ParseError(str(e), path) from e
    return CoverDocument(name, cover=cover, path=location)


def load_document(path: Path | str) -> ComplexDocument | CoverDocument:
    """Complex or cover file, decided by its keys.

    Raises:
        ParseError: If the file cannot be read or is neither kind.
    """
    location = Path(path)
    try:
        text = location.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", location) from e
    for _, line in _lines(text):
        if line.startswith("vertices"):
            return parse_complex(text, location)
        if line.startswith(("ground", "member", "starcover")):
            return parse_cover(text, location)
    raise ParseError("neither a complex ('vertices:') nor a cover ('ground:' / 'starcover of')", location)


def dump_complex(complex: SimplicialComplex, name: str = "") -> str:
    """Complex file text listing the maximal simplices."""
    maximal = [
        s
        for s in complex
        if not any(set(s.vertices) <= set(t.vertices) for t in complex.simplices(s.dim + 1))
    ]
    lines = [f"name: {name}"] if name else []
    lines.append("vertices: " + " ".join(complex.labels))
    lines.append("simplices:")
    lines.extend(" ".join(s.vertices) for s in maximal if s.dim > 0)
    return "\n".join(lines) + "\n"


def dump_cover(cover: GroundSetCover, name: str = "") -> str:
    """Cover file text; ground and member elements sorted."""
    lines = [f"name: {name}"] if name else []
    lines.append("ground: " + " ".join(sorted(cover.ground)))
    lines.extend(f"member {label}: " + " ".join(sorted(subset)) for label, subset in cover.members)
    return "\n".join(lines) + "\n"
