"""
Covers, nerves and saturated cover data.

A cover is modelled combinatorially as labelled subsets of a finite ground
set. Saturating a cover adds every nonempty finite intersection as a member;
the resulting `SaturatedCoverDatum` bundles the ordered indices, the nerve,
the inclusion relation between members and the hat map
``b -> index of the member equal to the intersection over b``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from ..common.exceptions import CoverError, InvariantViolation
from ..common.logger import logger
from .simplicial import Simplex, SimplicialComplex, full_subcomplex, reduced_homology
from .zint import AbelianGroupInvariants

INTERSECTION_SEPARATOR = "&"
STAR_SEPARATOR = "."


@dataclass(frozen=True)
class GroundSetCover:
    """Ordered, labelled, nonempty subsets of a finite ground set."""

    ground: frozenset[str]
    members: tuple[tuple[str, frozenset[str]], ...]

    def __post_init__(self) -> None:
        labels = [label for label, _ in self.members]
        if len(set(labels)) != len(labels):
            raise CoverError(f"repeated member labels in {labels}")
        for label, subset in self.members:
            if not subset:
                raise CoverError(f"member {label!r} is empty")
            outside = subset - self.ground
            if outside:
                raise CoverError(f"member {label!r} has elements outside the ground set: {sorted(outside)}")

    @classmethod
    def of(cls, ground: Iterable[str], members: Iterable[tuple[str, Iterable[str]]]) -> GroundSetCover:
        return cls(frozenset(ground), tuple((str(label), frozenset(s)) for label, s in members))

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.members)

    @cached_property
    def _by_label(self) -> dict[str, frozenset[str]]:
        return dict(self.members)

    def member(self, label: str) -> frozenset[str]:
        try:
            return self._by_label[label]
        except KeyError:
            raise CoverError(f"unknown member {label!r}") from None

    def intersection(self, labels: Iterable[str]) -> frozenset[str]:
        sets = [self.member(label) for label in labels]
        if not sets:
            return self.ground
        return frozenset.intersection(*sets)

    def uncovered(self) -> frozenset[str]:
        """Ground elements in no member; reported, not rejected."""
        covered: set[str] = set()
        for _, subset in self.members:
            covered |= subset
        return self.ground - covered


def nerve(c: GroundSetCover) -> SimplicialComplex:
    """Index sets with nonempty intersection; vertex order is member order."""
    sets = [subset for _, subset in c.members]
    labels = c.labels
    found: list[tuple[str, ...]] = []

    def extend(prefix: tuple[int, ...], common: frozenset[str]) -> None:
        for j in range(prefix[-1] + 1, len(sets)):
            meet = common & sets[j]
            if meet:
                grown = (*prefix, j)
                found.append(tuple(labels[i] for i in grown))
                extend(grown, meet)

    for i in range(len(sets)):
        found.append((labels[i],))
        extend((i,), sets[i])

    return SimplicialComplex(labels, found)


# ==============================================================================
# SATURATED COVER DATA
# ==============================================================================


@dataclass(frozen=True, eq=False)
class SaturatedCoverDatum:
    """Ordered indices, nerve, inclusion relation and hat map of a saturated cover.

    ``incl`` holds the pairs ``(j, i)`` with ``U_j ⊆ U_i`` (reflexive).
    """

    indices: tuple[str, ...]
    nerve: SimplicialComplex
    incl: frozenset[tuple[str, str]]
    hat: Mapping[Simplex, str]
    name: str = ""
    _subnerves: dict[str, SimplicialComplex] = field(default_factory=dict, repr=False)

    @cached_property
    def _order(self) -> dict[str, int]:
        return {label: rank for rank, label in enumerate(self.indices)}

    def order(self, index: str) -> int:
        return self._order[index]

    def includes(self, j: str, i: str) -> bool:
        """``U_j ⊆ U_i``"""
        return (j, i) in self.incl

    def hat_of(self, b: Simplex) -> str:
        try:
            return self.hat[b]
        except KeyError:
            raise CoverError(f"{b} is not a nerve simplex") from None

    def hat_of_labels(self, labels: Iterable[str]) -> str:
        return self.hat_of(Simplex(self.nerve.sort(labels)))

    def below(self, i: str) -> tuple[str, ...]:
        """Indices ``j`` with ``U_j ⊆ U_i``, in index order."""
        return tuple(j for j in self.indices if (j, i) in self.incl)

    def subnerve(self, b: Simplex) -> SimplicialComplex:
        """Full subcomplex of the nerve on ``{j : U_j ⊆ U_hat(b)}``."""
        top = self.hat_of(b)
        if top not in self._subnerves:
            self._subnerves[top] = full_subcomplex(self.nerve, self.below(top))
        return self._subnerves[top]

    def __repr__(self) -> str:
        return (
            f"SaturatedCoverDatum(name={self.name!r}, indices={len(self.indices)}, "
            f"nerve={self.nerve.f_vector()})"
        )


def subnerve(d: SaturatedCoverDatum, b: Simplex) -> SimplicialComplex:
    return d.subnerve(b)


def datum_from_cover(c: GroundSetCover, name: str = "") -> SaturatedCoverDatum:
    """Datum of an already saturated cover.

    Raises:
        CoverError: If two members coincide or some intersection is not a member.
    """
    by_set: dict[frozenset[str], str] = {}
    for label, subset in c.members:
        if subset in by_set:
            raise CoverError(f"members {by_set[subset]!r} and {label!r} are the same set")
        by_set[subset] = label

    complex = nerve(c)
    hat: dict[Simplex, str] = {}
    for b in complex:
        meet = c.intersection(b)
        try:
            hat[b] = by_set[meet]
        except KeyError:
            raise CoverError(f"cover is not saturated: no member equals the intersection over {b}") from None

    incl = frozenset(
        (j, i) for j, sj in c.members for i, si in c.members if sj <= si
    )
    return SaturatedCoverDatum(indices=c.labels, nerve=complex, incl=incl, hat=hat, name=name)


@dataclass(frozen=True)
class SaturationCandidate:
    label: str
    subset: frozenset[str]
    original: int | None  # position among the original members
    generators: tuple[int, ...]  # smallest generating tuple of original positions


def saturation_candidates(c: GroundSetCover) -> list[SaturationCandidate]:
    seen: dict[frozenset[str], str] = {}
    for label, subset in c.members:
        if subset in seen:
            raise CoverError(f"members {seen[subset]!r} and {label!r} are the same set")
        seen[subset] = label

    candidates = [
        SaturationCandidate(label, subset, position, (position,))
        for position, (label, subset) in enumerate(c.members)
    ]
    generated: dict[frozenset[str], tuple[int, ...]] = {}
    position = {label: p for p, label in enumerate(c.labels)}
    for b in nerve(c):
        if b.dim < 1:
            continue
        meet = c.intersection(b)
        if meet in seen:
            continue
        gens = tuple(position[label] for label in b)
        if meet not in generated or gens < generated[meet]:
            generated[meet] = gens

    taken = set(c.labels)
    for meet, gens in generated.items():
        label = INTERSECTION_SEPARATOR.join(c.labels[p] for p in gens)
        while label in taken:
            label += "'"
        taken.add(label)
        candidates.append(SaturationCandidate(label, meet, None, gens))
    return candidates


def linear_extension(
    candidates: Sequence[SaturationCandidate], priority: Callable[[SaturationCandidate], tuple[object, ...]]
) -> list[SaturationCandidate]:
    """Order with strict supersets first and originals in their given order.

    Among the admissible next candidates the one with the smallest priority
    is emitted.

    Raises:
        CoverError: If the original order contradicts reverse inclusion.
    """
    remaining = list(candidates)
    emitted: list[SaturationCandidate] = []
    next_original = 0
    while remaining:
        ready = [
            x
            for x in remaining
            if (x.original is None or x.original == next_original)
            and not any(y.subset > x.subset for y in remaining)
        ]
        if not ready:
            blocked = ", ".join(repr(x.label) for x in remaining if x.original is not None)
            raise CoverError(
                f"member order contradicts reverse inclusion (a member precedes a strict superset): {blocked}"
            )
        chosen = min(ready, key=priority)
        remaining.remove(chosen)
        emitted.append(chosen)
        if chosen.original is not None:
            next_original += 1
    return emitted


def _default_priority(x: SaturationCandidate) -> tuple[object, ...]:
    if x.original is not None:
        return (0, x.original)
    return (1, -len(x.subset), x.generators)


def saturate(
    c: GroundSetCover,
    name: str = "",
    priority: Callable[[SaturationCandidate], tuple[object, ...]] = _default_priority,
) -> tuple[GroundSetCover, SaturatedCoverDatum]:
    """Add every distinct nonempty intersection as a member and build the datum.

    New members are named after their smallest generating index tuple and are
    ordered by decreasing size, ties broken on that tuple; they are appended
    after the originals unless a new member strictly contains a pending
    original, in which case it moves just ahead of it.
    """
    candidates = saturation_candidates(c)
    ordered = linear_extension(candidates, priority)
    saturated = GroundSetCover(c.ground, tuple((x.label, x.subset) for x in ordered))
    added = len(saturated.members) - len(c.members)
    logger.info(f"saturate {name or 'cover'}: {len(c.members)} members, {added} intersections added")
    return saturated, datum_from_cover(saturated, name=name)


def star_ground_cover(x: SimplicialComplex) -> GroundSetCover:
    """Open stars of the simplices of ``x`` over the ground set of its simplices."""
    simplices = list(x)
    label = {s: STAR_SEPARATOR.join(s.vertices) for s in simplices}
    ground = frozenset(label.values())
    members = []
    for sigma in simplices:
        star = frozenset(label[tau] for tau in simplices if set(sigma.vertices) <= set(tau.vertices))
        members.append((label[sigma], star))
    return GroundSetCover(ground, tuple(members))


def star_cover(x: SimplicialComplex, name: str = "") -> SaturatedCoverDatum:
    """Saturated datum of the open-star cover; indices ordered by (dimension, lex).

    Raises:
        CoverError: If ``x`` is empty.
    """
    if not len(x):
        raise CoverError("the star cover of an empty complex is undefined")
    datum = datum_from_cover(star_ground_cover(x), name=name)
    logger.info(f"star cover {name}: {len(datum.indices)} indices, nerve {datum.nerve.f_vector()}")
    return datum


def restrict_nerve(d: SaturatedCoverDatum, indices: Iterable[str]) -> SimplicialComplex:
    """The nerve of the sub-cover on ``indices``: a full subcomplex of ``d.nerve``."""
    return full_subcomplex(d.nerve, indices)


# ==============================================================================
# VALIDATION
# ==============================================================================


def datum_violations(d: SaturatedCoverDatum) -> list[str]:
    """Every failed saturated-cover axiom, as readable messages."""
    problems: list[str] = []
    for b in d.nerve:
        if b not in d.hat:
            problems.append(f"no hat for {b}")
    if problems:
        return problems

    for i in d.indices:
        if d.hat_of(Simplex((i,))) != i:
            problems.append(f"hat({{{i}}}) = {d.hat_of(Simplex((i,)))} instead of {i}")

    for j, i in sorted(d.incl):
        if i != j and not d.order(i) < d.order(j):
            problems.append(f"ordering: U_{j} ⊆ U_{i} but {i} does not precede {j}")

    for b in d.nerve:
        top = d.hat_of(b)
        for _, face in b.faces():
            if face.dim >= 0 and d.order(d.hat_of(face)) > d.order(top):
                problems.append(f"monotonicity: hat{face} > hat{b}")
        for label in b:
            if not d.includes(top, label):
                problems.append(f"hat{b} = {top} is not contained in U_{label}")
        for j in d.below(top):
            if j not in b and Simplex(d.nerve.sort((*b.vertices, j))) not in d.nerve:
                problems.append(f"cone vertex: {b} + {j} is not a nerve simplex")
    return problems


def validate_datum(d: SaturatedCoverDatum) -> SaturatedCoverDatum:
    """Raises InvariantViolation listing every failed axiom."""
    problems = datum_violations(d)
    if problems:
        raise InvariantViolation(f"{len(problems)} datum axiom violation(s): " + "; ".join(problems[:10]))
    return d


# ==============================================================================
# GOODNESS
# ==============================================================================


@dataclass(frozen=True)
class SubcomplexCover:
    """Labelled subcomplexes of a complex ``x``."""

    complex: SimplicialComplex
    members: tuple[tuple[str, SimplicialComplex], ...]

    def __post_init__(self) -> None:
        for label, member in self.members:
            if not len(member):
                raise CoverError(f"member {label!r} is empty")
            if not member.is_subcomplex_of(self.complex):
                raise CoverError(f"member {label!r} is not a subcomplex")

    def as_ground_cover(self) -> GroundSetCover:
        """Ground set = simplices of the complex, member = its simplices."""
        key = {s: STAR_SEPARATOR.join(s.vertices) for s in self.complex}
        return GroundSetCover(
            frozenset(key.values()),
            tuple((label, frozenset(key[s] for s in member)) for label, member in self.members),
        )

    def intersection(self, labels: Iterable[str]) -> SimplicialComplex:
        chosen = [m for label, m in self.members if label in set(labels)]
        common = set(chosen[0])
        for member in chosen[1:]:
            common &= set(member)
        kept = [v for v in self.complex.labels if Simplex((v,)) in common]
        return SimplicialComplex(kept, (s.vertices for s in common))


@dataclass(frozen=True)
class GoodnessEntry:
    simplex: Simplex
    connected: bool
    reduced_homology: tuple[AbelianGroupInvariants, ...]

    @property
    def passed(self) -> bool:
        return self.connected and all(group.is_trivial for group in self.reduced_homology)


@dataclass(frozen=True)
class CoverGoodnessReport:
    entries: tuple[GoodnessEntry, ...]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> tuple[GoodnessEntry, ...]:
        return tuple(entry for entry in self.entries if not entry.passed)


def _acyclicity(simplex: Simplex, complex: SimplicialComplex) -> GoodnessEntry:
    groups = tuple(reduced_homology(complex))
    connected = len(complex) > 0 and (not groups or groups[0].is_trivial)
    return GoodnessEntry(simplex, connected, groups)


def goodness_check(c: SubcomplexCover) -> CoverGoodnessReport:
    """Z-acyclicity of every nonempty intersection, one entry per nerve simplex."""
    entries = [
        _acyclicity(b, c.intersection(b)) for b in nerve(c.as_ground_cover())
    ]
    return CoverGoodnessReport(tuple(entries))


def datum_goodness(d: SaturatedCoverDatum) -> CoverGoodnessReport:
    """Z-acyclicity of every subnerve (computed once per hat value)."""
    cache: dict[str, GoodnessEntry] = {}
    entries = []
    for b in d.nerve:
        top = d.hat_of(b)
        if top not in cache:
            cache[top] = _acyclicity(b, d.subnerve(b))
        entries.append(GoodnessEntry(b, cache[top].connected, cache[top].reduced_homology))
    return CoverGoodnessReport(tuple(entries))
