"""
The Čech double complex of a saturated cover datum.

Column ``b`` of the homology double complex is the augmented chain complex of
the subnerve ``N_b``; rows are joined by the covariant Čech differential that
includes chains along the deletion of one index. The cohomology side is the
dual picture. Every nerve simplex ``b`` carries the cone vertex ``hat(b)`` of
its subnerve, and the cone operator built from it contracts each column.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from itertools import permutations
from typing import ClassVar, Generic, Self, TypeVar

from sympy.combinatorics import Permutation

from ..common.exceptions import CertificationFailure, ChainError, InvariantViolation
from ..common.logger import logger
from .cover import SaturatedCoverDatum
from .simplicial import (
    EMPTY,
    Chain,
    Cochain,
    Simplex,
    SimplicialComplex,
    boundary,
    coboundary,
    coboundary_matrix,
    render_terms,
)
from .zint import IntegerSolver, IntVector, zeros

E = TypeVar("E", Chain, Cochain)


# ==============================================================================
# DOUBLE COMPLEX ELEMENTS
# ==============================================================================


@dataclass(frozen=True, eq=False)
class _CechElement(Generic[E]):
    """Parts keyed by nerve ``cech_degree``-simplices, each on its own subnerve."""

    part_type: ClassVar[type[Chain] | type[Cochain]]

    datum: SaturatedCoverDatum
    cech_degree: int
    inner_degree: int
    parts: Mapping[Simplex, E] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.cech_degree < 0:
            raise ChainError(f"Čech degree {self.cech_degree} is negative")
        pruned: dict[Simplex, E] = {}
        for b, part in self.parts.items():
            if b.dim != self.cech_degree or b not in self.datum.nerve:
                raise ChainError(f"{b} is not a nerve simplex of dimension {self.cech_degree}")
            if not isinstance(part, self.part_type) or part.degree != self.inner_degree:
                raise ChainError(f"part on {b} is not a {self.part_type.__name__} of degree {self.inner_degree}")
            local = self.datum.subnerve(b)
            if part.complex is not local:
                part = part.rehome(local)
            if part:
                pruned[b] = part
        object.__setattr__(self, "parts", pruned)

    @classmethod
    def zero(cls, datum: SaturatedCoverDatum, cech_degree: int, inner_degree: int) -> Self:
        return cls(datum, cech_degree, inner_degree, {})

    @classmethod
    def concentrated(cls, datum: SaturatedCoverDatum, b: Simplex, part: E) -> Self:
        return cls(datum, b.dim, part.degree, {b: part})

    def __getitem__(self, b: Simplex) -> E:
        if b in self.parts:
            return self.parts[b]
        return self.part_type.zero(self.datum.subnerve(b), self.inner_degree)  # type: ignore[return-value]

    def items(self) -> list[tuple[Simplex, E]]:
        return sorted(self.parts.items(), key=lambda item: self.datum.nerve.sort_key(item[0]))

    def __iter__(self) -> Iterator[tuple[Simplex, E]]:
        return iter(self.items())

    def __bool__(self) -> bool:
        return bool(self.parts)

    def _check_compatible(self, other: _CechElement[E]) -> None:
        if type(self) is not type(other) or self.datum is not other.datum:
            raise ChainError("cannot combine Čech elements of different kinds or data")
        if (self.cech_degree, self.inner_degree) != (other.cech_degree, other.inner_degree):
            raise ChainError(
                f"bidegree ({self.cech_degree}, {self.inner_degree}) does not match "
                f"({other.cech_degree}, {other.inner_degree})"
            )

    def __add__(self, other: Self) -> Self:
        self._check_compatible(other)
        parts = dict(self.parts)
        for b, part in other.parts.items():
            parts[b] = parts[b] + part if b in parts else part
        return type(self)(self.datum, self.cech_degree, self.inner_degree, parts)

    def __neg__(self) -> Self:
        return type(self)(self.datum, self.cech_degree, self.inner_degree, {b: -p for b, p in self.parts.items()})

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def __rmul__(self, scalar: int) -> Self:
        return type(self)(
            self.datum, self.cech_degree, self.inner_degree, {b: scalar * p for b, p in self.parts.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return (
            self.datum is other.datum
            and (self.cech_degree, self.inner_degree) == (other.cech_degree, other.inner_degree)
            and self.parts.keys() == other.parts.keys()
            and all(self.parts[b].terms == other.parts[b].terms for b in self.parts)
        )

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return render(self)


class CechChain(_CechElement[Chain]):
    """An element of the homology double complex at ``(cech_degree, inner_degree)``."""

    part_type = Chain

    @classmethod
    def generator(cls, datum: SaturatedCoverDatum, b: Simplex) -> CechChain:
        """``e_b``: the integer 1 on key ``b`` in inner degree -1."""
        return cls.concentrated(datum, b, Chain(datum.subnerve(b), -1, {EMPTY: 1}))


class CechCochain(_CechElement[Cochain]):
    """An element of the cohomology double complex at ``(cech_degree, inner_degree)``."""

    part_type = Cochain


@dataclass(frozen=True, eq=False)
class CechCocycleZ:
    """Integer Čech cocycle: one value per nerve ``k``-simplex, δ̌-closed.

    In inner degree -1 the Čech differential is the simplicial coboundary of
    the nerve, so a cocycle is stored as a closed ``k``-cochain on it.

    Raises:
        InvariantViolation: If the values are not δ̌-closed.
    """

    nerve: SimplicialComplex
    k: int
    values: Mapping[Simplex, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cochain = Cochain(self.nerve, self.k, self.values)
        object.__setattr__(self, "values", dict(cochain.terms))
        if coboundary(cochain):
            raise InvariantViolation(f"degree {self.k} Čech cochain is not closed")

    @classmethod
    def from_cochain(cls, cochain: Cochain) -> CechCocycleZ:
        return cls(cochain.complex, cochain.degree, cochain.terms)

    @classmethod
    def from_cech(cls, element: CechCochain) -> CechCocycleZ:
        if element.inner_degree != -1:
            raise ChainError("only inner degree -1 Čech cochains are integer families")
        return cls(element.datum.nerve, element.cech_degree, {b: p[EMPTY] for b, p in element.parts.items()})

    @property
    def cochain(self) -> Cochain:
        return Cochain(self.nerve, self.k, self.values)

    def to_cech(self, datum: SaturatedCoverDatum) -> CechCochain:
        parts = {b: Cochain(datum.subnerve(b), -1, {EMPTY: v}) for b, v in self.values.items()}
        return CechCochain(datum, self.k, -1, parts)

    def __getitem__(self, b: Simplex) -> int:
        return self.values.get(b, 0)

    def items(self) -> list[tuple[Simplex, int]]:
        return self.cochain.items()

    def __add__(self, other: CechCocycleZ) -> CechCocycleZ:
        return CechCocycleZ.from_cochain(self.cochain + other.cochain)

    def __neg__(self) -> CechCocycleZ:
        return CechCocycleZ.from_cochain(-self.cochain)

    def __sub__(self, other: CechCocycleZ) -> CechCocycleZ:
        return CechCocycleZ.from_cochain(self.cochain - other.cochain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CechCocycleZ):
            return NotImplemented
        return self.k == other.k and self.values == other.values and self.nerve == other.nerve

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.values)

    def __str__(self) -> str:
        return render_terms(self.items())


def render(element: Chain | Cochain | _CechElement[Chain] | _CechElement[Cochain] | CechCocycleZ) -> str:
    """Deterministic text: ``(x_a x_b) - 2(x_c)``; Čech elements one ``key: part`` per line."""
    if isinstance(element, _CechElement):
        if not element:
            return "0"
        lines = []
        for b, part in element.items():
            body = str(part[EMPTY]) if element.inner_degree == -1 else render_terms(part.items())
            lines.append(f"{b}: {body}")
        return "\n".join(lines)
    return render_terms(element.items())


def pair(phi: CechCochain, c: CechChain) -> int:
    """``<φ, c> = Σ_b <φ_b, c_b>``"""
    if phi.datum is not c.datum or (phi.cech_degree, phi.inner_degree) != (c.cech_degree, c.inner_degree):
        raise ChainError("cannot pair Čech elements of different data or bidegrees")
    return sum(phi[b](part) for b, part in c.parts.items())


# ==============================================================================
# ČECH DIFFERENTIALS
# ==============================================================================


def cech_partial(c: CechChain) -> CechChain:
    """Covariant Čech differential: key ``b`` sends ``(-1)^j z`` to ``b`` minus its j-th index.

    Raises:
        ChainError: In Čech degree 0, where the augmentation applies instead.
    """
    if c.cech_degree < 1:
        raise ChainError("cech_partial needs Čech degree >= 1; use cech_augmentation in degree 0")
    d = c.datum
    parts: dict[Simplex, Chain] = {}
    for b, z in c.parts.items():
        for j, face in b.faces():
            moved = (-1) ** j * z.rehome(d.subnerve(face))
            parts[face] = parts[face] + moved if face in parts else moved
    return CechChain(d, c.cech_degree - 1, c.inner_degree, parts)


def cech_augmentation(c: CechChain) -> Chain:
    """Čech degree 0 to the nerve: the sum of every part included into ``C(N)``."""
    if c.cech_degree != 0:
        raise ChainError("cech_augmentation is defined in Čech degree 0 only")
    total = Chain.zero(c.datum.nerve, c.inner_degree)
    for _, z in c.parts.items():
        total = total + z.rehome(c.datum.nerve)
    return total


def _cofaces(d: SaturatedCoverDatum, a: Simplex) -> Iterator[tuple[int, Simplex]]:
    """``(j, b)`` with ``b`` a nerve simplex whose j-th face is ``a``."""
    for v in d.indices:
        if v in a:
            continue
        b = Simplex(d.nerve.sort((*a.vertices, v)))
        if b in d.nerve:
            yield b.vertices.index(v), b


def cech_delta(phi: CechCochain) -> CechCochain:
    """Contravariant Čech differential, the adjoint of `cech_partial`."""
    d = phi.datum
    parts: dict[Simplex, Cochain] = {}
    for a, part in phi.parts.items():
        for j, b in _cofaces(d, a):
            moved = (-1) ** j * part.restrict(d.subnerve(b))
            parts[b] = parts[b] + moved if b in parts else moved
    return CechCochain(d, phi.cech_degree + 1, phi.inner_degree, parts)


def cech_coaugmentation(d: SaturatedCoverDatum, phi: Cochain) -> CechCochain:
    """A nerve cochain restricted to every vertex subnerve: Čech degree 0."""
    if phi.complex != d.nerve:
        raise ChainError("the coaugmentation takes cochains on the nerve")
    parts = {b: phi.restrict(d.subnerve(b)) for b in d.nerve.simplices(0)}
    return CechCochain(d, 0, phi.degree, parts)


# ==============================================================================
# CONE OPERATORS
# ==============================================================================


def _coned(d: SaturatedCoverDatum, b: Simplex, simplex: Simplex) -> Simplex | None:
    top = d.hat_of(b)
    if top in simplex:
        return None
    if simplex.vertices and d.order(top) > d.order(simplex.vertices[0]):
        raise InvariantViolation(f"cone vertex {top} does not precede {simplex} in the subnerve of {b}")
    return Simplex((top, *simplex.vertices))


def cone(d: SaturatedCoverDatum, b: Simplex, z: Chain) -> Chain:
    """``(x_J) -> (x_hat(b) x_J)``, zero when ``hat(b)`` is in ``J``; ``n -> n(x_hat(b))`` in degree -1.

    Raises:
        ChainError: If ``z`` is not supported on the subnerve of ``b``.
    """
    local = d.subnerve(b)
    if z.complex is not local:
        z = z.rehome(local)
    terms: dict[Simplex, int] = {}
    for simplex, value in z.terms.items():
        target = _coned(d, b, simplex)
        if target is not None:
            terms[target] = terms.get(target, 0) + value
    return Chain(local, z.degree + 1, terms)


def cone_dual(d: SaturatedCoverDatum, b: Simplex, phi: Cochain) -> Cochain:
    """``(C^v φ)(z) = φ(C z)``; the degree drops by one.

    Raises:
        ChainError: For a degree -1 cochain.
    """
    if phi.degree < 0:
        raise ChainError("the dual cone lowers the degree; degree -1 has nowhere to go")
    local = d.subnerve(b)
    if phi.complex is not local:
        phi = phi.rehome(local)
    terms: dict[Simplex, int] = {}
    for simplex in local.simplices(phi.degree - 1):
        target = _coned(d, b, simplex)
        if target is not None and phi[target]:
            terms[simplex] = phi[target]
    return Cochain(local, phi.degree - 1, terms)


def cech_cone(c: CechChain) -> CechChain:
    """The cone applied part by part, each with its own ``hat(b)``."""
    parts = {b: cone(c.datum, b, z) for b, z in c.parts.items()}
    return CechChain(c.datum, c.cech_degree, c.inner_degree + 1, parts)


def cech_cone_dual(phi: CechCochain) -> CechCochain:
    parts = {b: cone_dual(phi.datum, b, part) for b, part in phi.parts.items()}
    return CechCochain(phi.datum, phi.cech_degree, phi.inner_degree - 1, parts)


def cone_homotopy_defect(d: SaturatedCoverDatum, b: Simplex, z: Chain) -> Chain:
    """``∂Cz + C∂z - z``, with ``∂`` read as zero below degree 0 and augmented in degree 0."""
    local = d.subnerve(b)
    z = z if z.complex is local else z.rehome(local)
    total = boundary(cone(d, b, z), augmented=True) - z
    if z.degree >= 0:
        total = total + cone(d, b, boundary(z, augmented=True))
    return total


def cone_dual_homotopy_defect(d: SaturatedCoverDatum, b: Simplex, phi: Cochain) -> Cochain:
    """``δC^vφ + C^vδφ - φ``, with ``C^v`` read as zero in degree -1."""
    local = d.subnerve(b)
    phi = phi if phi.complex is local else phi.rehome(local)
    total = cone_dual(d, b, coboundary(phi)) - phi
    if phi.degree >= 0:
        total = total + coboundary(cone_dual(d, b, phi))
    return total


def cone_lemma_holds(d: SaturatedCoverDatum, b: Simplex) -> bool:
    """Both contraction identities on every basis element of the subnerve of ``b``."""
    local = d.subnerve(b)
    for degree in range(-1, local.dimension + 1):
        for simplex in local.simplices(degree):
            if cone_homotopy_defect(d, b, Chain.basis(local, simplex)):
                return False
            if cone_dual_homotopy_defect(d, b, Cochain.basis(local, simplex)):
                return False
    return True


# ==============================================================================
# ITERATED CHASES
# ==============================================================================


def palindromic_sign(k: int) -> int:
    """Sign of ``i -> k - i`` on ``{0, ..., k}``: ``(-1)^(k(k+1)/2)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return -1 if (k * (k + 1) // 2) % 2 else 1


def _nested_hats(d: SaturatedCoverDatum, b: Simplex, order: tuple[int, ...]) -> tuple[str, ...]:
    """``hat`` of the growing index sets ``{b_order[0]}, {b_order[0], b_order[1]}, ...``."""
    return tuple(d.hat_of_labels(b.vertices[i] for i in order[: r + 1]) for r in range(len(order)))


def iterated_chase_closed_form(d: SaturatedCoverDatum, b: Simplex) -> Chain:
    """Signed sum over permutations of nested-hat simplices.

    The term of ``σ`` is ``sgn σ (x_hat{b_σ(k)} x_hat{b_σ(k), b_σ(k-1)} ... x_hat(b))``;
    a term whose hats repeat is zero.
    """
    if b not in d.nerve or b.dim < 0:
        raise ChainError(f"{b} is not a nerve simplex")
    k = b.dim
    terms: dict[Simplex, int] = {}
    for sigma in permutations(range(k + 1)):
        hats = _nested_hats(d, b, tuple(reversed(sigma)))
        if len(set(hats)) < len(hats):
            continue
        if d.nerve.sort(hats) != hats:
            raise InvariantViolation(f"nested hats {hats} of {b} are not increasing")
        simplex = Simplex(hats)
        terms[simplex] = terms.get(simplex, 0) + Permutation(list(sigma)).signature()
    return Chain(d.nerve, k, terms)


def iterated_chase_bruteforce(d: SaturatedCoverDatum, b: Simplex) -> Chain:
    """Cone then Čech differential, ``k + 1`` times, starting from ``e_b``."""
    if b not in d.nerve or b.dim < 0:
        raise ChainError(f"{b} is not a nerve simplex")
    element = CechChain.generator(d, b)
    while True:
        element = cech_cone(element)
        if element.cech_degree == 0:
            return cech_augmentation(element)
        element = cech_partial(element)


def subdivision_S(d: SaturatedCoverDatum, c: Chain) -> Chain:
    """``(x_b) -> Σ_σ sgn σ (x_hat{b_σ(0)} x_hat{b_σ(0), b_σ(1)} ...)``, extended linearly.

    Equals ``palindromic_sign(k)`` times the closed-form chase on each simplex.
    """
    if c.complex != d.nerve:
        raise ChainError("subdivision acts on chains of the nerve")
    if c.degree < 0:
        return c.rehome(d.nerve)
    sign = palindromic_sign(c.degree)
    total = Chain.zero(d.nerve, c.degree)
    for simplex, value in c.terms.items():
        total = total + (sign * value) * iterated_chase_closed_form(d, simplex)
    return total


def subdivision_dual(d: SaturatedCoverDatum, alpha: Cochain) -> Cochain:
    """``S^v α = α ∘ S`` on the nerve."""
    terms = {s: alpha(subdivision_S(d, Chain.basis(d.nerve, s))) for s in d.nerve.simplices(alpha.degree)}
    return Cochain(d.nerve, alpha.degree, terms)


def witness_solver(nerve: SimplicialComplex, k: int) -> IntegerSolver:
    """Solver for ``δ̌x = y`` from Čech degree ``k - 1`` into ``k``, inner degree -1.

    Nothing lives in Čech degree -1, so in degree 0 the system has no
    unknowns and only ``y = 0`` is solvable.
    """
    if k < 0:
        raise ChainError(f"no witnesses in degree {k}")
    if k == 0:
        return IntegerSolver(zeros(len(nerve.simplices(0)), 0))
    return IntegerSolver(coboundary_matrix(nerve, k - 1))


def witness_from_solution(nerve: SimplicialComplex, k: int, solution: IntVector) -> Cochain:
    """One integer per nerve ``(k-1)``-simplex; the zero cochain on the empty simplex in degree 0."""
    if k == 0:
        return Cochain.zero(nerve, -1)
    return Cochain.from_vector(nerve, k - 1, solution)


def subdivision_homotopy_witness(d: SaturatedCoverDatum, alpha: Cochain, k: int) -> Cochain:
    """``β`` with ``δβ = α∘S - α`` on the nerve, for a closed ``k``-cochain ``α``.

    Raises:
        CertificationFailure: If no integral ``β`` exists.
    """
    alpha = alpha if alpha.complex is d.nerve else alpha.rehome(d.nerve)
    if alpha.degree != k:
        raise ChainError(f"expected a degree {k} cochain, got degree {alpha.degree}")
    difference = subdivision_dual(d, alpha) - alpha
    solution = witness_solver(d.nerve, k).solve(difference.to_vector())
    if solution is None:
        raise CertificationFailure(f"α∘S - α is not a coboundary in degree {k}")
    beta = witness_from_solution(d.nerve, k, solution)
    if coboundary(beta) != difference:
        raise InvariantViolation("subdivision witness failed re-verification")
    logger.debug(f"subdivision witness in degree {k}: {len(beta.terms)} nonzero values")
    return beta


def cech_delta_matrix(d: SaturatedCoverDatum, k: int) -> list[list[int]]:
    """Matrix of δ̌ in inner degree -1 from Čech degree ``k``, built one key at a time."""
    rows = d.nerve.simplices(k + 1)
    index = {b: i for i, b in enumerate(rows)}
    columns = []
    for a in d.nerve.simplices(k):
        image = cech_delta(CechCochain.concentrated(d, a, Cochain(d.subnerve(a), -1, {EMPTY: 1})))
        column = [0] * len(rows)
        for b, part in image.parts.items():
            column[index[b]] = part[EMPTY]
        columns.append(column)
    return [list(row) for row in zip(*columns, strict=True)] if columns else [[] for _ in rows]
