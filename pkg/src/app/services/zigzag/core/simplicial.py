"""
Finite abstract simplicial complexes with totally ordered vertices.

A simplex is stored as the tuple of its vertex labels in increasing rank
order, so orientations are never stored, only computed. The empty simplex
``()`` is the unique simplex of dimension -1 and carries the augmentation:
a chain of degree -1 is an integer multiple of it.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Self

import numpy as np

from ..common.exceptions import ChainError, ComplexError
from .zint import AbelianGroupInvariants, IntMatrix, IntVector, homology_invariants, zeros


@dataclass(frozen=True, slots=True)
class Vertex:
    label: str
    rank: int


@dataclass(frozen=True, slots=True)
class Simplex:
    """Vertex labels in strictly increasing rank order of the ambient complex."""

    vertices: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def face(self, j: int) -> Simplex:
        """The face opposite to the j-th vertex."""
        return Simplex(self.vertices[:j] + self.vertices[j + 1 :])

    def faces(self) -> Iterator[tuple[int, Simplex]]:
        for j in range(len(self.vertices)):
            yield j, self.face(j)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, label: object) -> bool:
        return label in self.vertices

    def __str__(self) -> str:
        return "(" + " ".join(f"x_{v}" for v in self.vertices) + ")"


EMPTY = Simplex(())


class SimplicialComplex:
    """Downward-closed family of simplices over an ordered vertex list.

    Construction computes the downward closure of the given simplices and adds
    every vertex as a 0-simplex. Simplices of each dimension are kept in the
    canonical basis order: lexicographic on vertex ranks.
    """

    def __init__(self, vertices: Sequence[str], simplices: Iterable[Iterable[str]] = ()) -> None:
        labels = [str(v) for v in vertices]
        if len(set(labels)) != len(labels):
            raise ComplexError(f"repeated vertex labels in {labels}")
        self._vertices = tuple(Vertex(label, rank) for rank, label in enumerate(labels))
        self._ranks = {v.label: v.rank for v in self._vertices}

        closure: set[tuple[str, ...]] = {(label,) for label in labels}
        for raw in simplices:
            members = tuple(str(v) for v in raw)
            if not members:
                continue
            if len(set(members)) != len(members):
                raise ComplexError(f"repeated vertex in simplex {members}")
            ordered = self.sort(members)
            if ordered in closure:
                continue
            for size in range(1, len(ordered) + 1):
                closure.update(combinations(ordered, size))

        by_dim: dict[int, list[Simplex]] = {}
        for verts in closure:
            by_dim.setdefault(len(verts) - 1, []).append(Simplex(verts))
        self._by_dim: dict[int, tuple[Simplex, ...]] = {
            dim: tuple(sorted(items, key=self.sort_key)) for dim, items in sorted(by_dim.items())
        }
        self._index: dict[Simplex, int] = {
            s: i for items in self._by_dim.values() for i, s in enumerate(items)
        }

    @classmethod
    def from_maximal(cls, vertices: Sequence[str], maximal: Iterable[Iterable[str]]) -> Self:
        """Downward closure of the listed faces; listing non-maximal faces too is harmless."""
        return cls(vertices, maximal)

    # --- ordering -------------------------------------------------------------

    def rank(self, label: str) -> int:
        try:
            return self._ranks[label]
        except KeyError:
            raise ComplexError(f"unknown vertex {label!r}") from None

    def sort(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Labels in increasing rank order."""
        return tuple(sorted(labels, key=self.rank))

    def sort_key(self, simplex: Simplex | Sequence[str]) -> tuple[int, ...]:
        return tuple(self._ranks[v] for v in simplex)

    def simplex(self, *labels: str) -> Simplex:
        """The member simplex spanned by ``labels`` (any order)."""
        simplex = Simplex(self.sort(labels))
        if simplex not in self:
            raise ComplexError(f"{simplex} is not a simplex of this complex")
        return simplex

    # --- queries --------------------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self._vertices)

    @property
    def dimension(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices(self, dim: int) -> tuple[Simplex, ...]:
        """Canonical basis of ``C_dim``; dimension -1 is the empty simplex."""
        if dim == -1:
            return (EMPTY,)
        return self._by_dim.get(dim, ())

    def __iter__(self) -> Iterator[Simplex]:
        for items in self._by_dim.values():
            yield from items

    def __len__(self) -> int:
        return len(self._index)

    def __contains__(self, simplex: object) -> bool:
        return simplex == EMPTY or simplex in self._index

    def index(self, simplex: Simplex) -> int:
        if simplex == EMPTY:
            return 0
        try:
            return self._index[simplex]
        except KeyError:
            raise ChainError(f"{simplex} is not a simplex of this complex") from None

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices(d)) for d in range(self.dimension + 1))

    @cached_property
    def _signature(self) -> tuple[tuple[str, ...], frozenset[Simplex]]:
        return self.labels, frozenset(self._index)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._signature == other._signature

    def __hash__(self) -> int:
        return hash(self._signature)

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={list(self.labels)}, f_vector={self.f_vector()})"

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        if any(label not in other._ranks for label in self.labels):
            return False
        ranks = other.sort_key(self.labels)
        if list(ranks) != sorted(ranks):
            return False
        return all(s in other for s in self)


# ==============================================================================
# CHAINS AND COCHAINS
# ==============================================================================


@dataclass(frozen=True, eq=False)
class _Combination:
    """Finite integer combination of same-dimensional simplices of one complex."""

    complex: SimplicialComplex
    degree: int
    terms: Mapping[Simplex, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < -1:
            raise ChainError(f"degree {self.degree} is below the augmentation degree -1")
        pruned: dict[Simplex, int] = {}
        for simplex, value in self.terms.items():
            if simplex.dim != self.degree:
                raise ChainError(f"{simplex} has dimension {simplex.dim}, expected {self.degree}")
            if simplex not in self.complex:
                raise ChainError(f"{simplex} is not a simplex of the ambient complex")
            if value:
                pruned[simplex] = int(value)
        object.__setattr__(self, "terms", pruned)

    @classmethod
    def zero(cls, complex: SimplicialComplex, degree: int) -> Self:
        return cls(complex, degree, {})

    @classmethod
    def basis(cls, complex: SimplicialComplex, simplex: Simplex, value: int = 1) -> Self:
        return cls(complex, simplex.dim, {simplex: value})

    @classmethod
    def from_vector(cls, complex: SimplicialComplex, degree: int, vector: IntVector | Sequence[int]) -> Self:
        basis = complex.simplices(degree)
        if len(vector) != len(basis):
            raise ChainError(f"vector of length {len(vector)} for a basis of {len(basis)}")
        return cls(complex, degree, {s: int(v) for s, v in zip(basis, vector, strict=True) if v})

    def to_vector(self) -> IntVector:
        basis = self.complex.simplices(self.degree)
        vector = np.zeros(len(basis), dtype=object)
        for simplex, value in self.terms.items():
            vector[self.complex.index(simplex)] = value
        return vector

    def __getitem__(self, simplex: Simplex) -> int:
        return self.terms.get(simplex, 0)

    def __iter__(self) -> Iterator[tuple[Simplex, int]]:
        return iter(self.items())

    def items(self) -> list[tuple[Simplex, int]]:
        return sorted(self.terms.items(), key=lambda item: self.complex.sort_key(item[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_compatible(self, other: _Combination) -> None:
        if type(self) is not type(other) or self.degree != other.degree:
            raise ChainError(f"cannot combine {self!r} with {other!r}")
        if self.complex != other.complex:
            raise ChainError("cannot combine elements over different complexes")

    def __add__(self, other: Self) -> Self:
        self._check_compatible(other)
        terms = dict(self.terms)
        for simplex, value in other.terms.items():
            terms[simplex] = terms.get(simplex, 0) + value
        return type(self)(self.complex, self.degree, terms)

    def __neg__(self) -> Self:
        return type(self)(self.complex, self.degree, {s: -v for s, v in self.terms.items()})

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def __rmul__(self, scalar: int) -> Self:
        return type(self)(self.complex, self.degree, {s: scalar * v for s, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.terms == other.terms
            and self.complex == other.complex
        )

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def rehome(self, complex: SimplicialComplex) -> Self:
        """The same combination over another complex containing its support."""
        return type(self)(complex, self.degree, self.terms)

    def __str__(self) -> str:
        return render_terms(self.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}(degree={self.degree}, {self})"


class Chain(_Combination):
    """An element of ``C_degree``; coefficients keyed by simplex."""

    @property
    def coefficients(self) -> Mapping[Simplex, int]:
        return self.terms

    def augmentation(self) -> int:
        if self.degree != 0:
            raise ChainError("augmentation is defined on 0-chains only")
        return sum(self.terms.values())


class Cochain(_Combination):
    """An element of ``C^degree``; values keyed by simplex."""

    @property
    def values(self) -> Mapping[Simplex, int]:
        return self.terms

    def restrict(self, complex: SimplicialComplex) -> Cochain:
        """Restriction to a subcomplex: values on its simplices only."""
        return Cochain(complex, self.degree, {s: v for s, v in self.terms.items() if s in complex})

    def __call__(self, chain: Chain) -> int:
        return evaluate(self, chain)


def render_terms(terms: Iterable[tuple[Simplex, int]]) -> str:
    """``(x_a x_b) - 2(x_c x_d)`` with canonical term order; ``0`` when empty."""
    out = ""
    for simplex, value in terms:
        magnitude = abs(value)
        body = f"{'' if magnitude == 1 else magnitude}{simplex}"
        if not out:
            out = body if value > 0 else f"-{body}"
        else:
            out += f" + {body}" if value > 0 else f" - {body}"
    return out or "0"


# ==============================================================================
# OPERATORS
# ==============================================================================


def boundary(c: Chain, augmented: bool = False) -> Chain:
    """Alternating sum of faces; a 0-chain maps to its coefficient sum on ``()``.

    Raises:
        ChainError: For degree 0 without ``augmented``, or for degree -1.
    """
    if c.degree == -1:
        raise ChainError("the boundary of a degree -1 chain is not defined")
    if c.degree == 0:
        if not augmented:
            raise ChainError("boundary of a 0-chain requires augmented=True")
        return Chain(c.complex, -1, {EMPTY: c.augmentation()})

    terms: dict[Simplex, int] = {}
    for simplex, value in c.terms.items():
        for j, face in simplex.faces():
            terms[face] = terms.get(face, 0) + (-1) ** j * value
    return Chain(c.complex, c.degree - 1, terms)


def coboundary(phi: Cochain, complex: SimplicialComplex | None = None) -> Cochain:
    """``(δφ)(s) = φ(∂s)`` for every (degree+1)-simplex ``s``."""
    target = phi.complex if complex is None else complex
    if complex is not None and complex != phi.complex:
        phi = phi.rehome(complex)

    terms: dict[Simplex, int] = {}
    for simplex in target.simplices(phi.degree + 1):
        if phi.degree == -1:
            value = phi[EMPTY]
        else:
            value = sum((-1) ** j * phi[face] for j, face in simplex.faces())
        if value:
            terms[simplex] = value
    return Cochain(target, phi.degree + 1, terms)


def evaluate(phi: Cochain, c: Chain) -> int:
    """The pairing ``<φ, c>``.

    Raises:
        ChainError: On degree mismatch or different ambient complexes.
    """
    if phi.degree != c.degree:
        raise ChainError(f"cannot evaluate a degree {phi.degree} cochain on a degree {c.degree} chain")
    if phi.complex != c.complex:
        raise ChainError("cochain and chain live on different complexes")
    return sum(value * phi[simplex] for simplex, value in c.terms.items())


def full_subcomplex(complex: SimplicialComplex, labels: Iterable[str]) -> SimplicialComplex:
    """All simplices with every vertex in ``labels``; the vertex order is inherited."""
    wanted = set(labels)
    unknown = wanted.difference(complex.labels)
    if unknown:
        raise ComplexError(f"unknown vertices {sorted(unknown)}")
    kept = [v for v in complex.labels if v in wanted]
    return SimplicialComplex(kept, (s.vertices for s in complex if wanted.issuperset(s.vertices)))


# ==============================================================================
# MATRICES AND INVARIANTS
# ==============================================================================


def boundary_matrix(complex: SimplicialComplex, degree: int) -> IntMatrix:
    """Matrix of ``∂ : C_degree → C_{degree-1}``; degree 0 is the augmentation row."""
    rows, cols = complex.simplices(degree - 1), complex.simplices(degree)
    matrix = zeros(len(rows), len(cols))
    if degree == 0:
        matrix[0, :] = 1
        return matrix
    for col, simplex in enumerate(cols):
        for j, face in simplex.faces():
            matrix[complex.index(face), col] = (-1) ** j
    return matrix


def coboundary_matrix(complex: SimplicialComplex, degree: int) -> IntMatrix:
    """Matrix of ``δ : C^degree → C^{degree+1}``."""
    return np.asarray(boundary_matrix(complex, degree + 1).T, dtype=object)


def homology(complex: SimplicialComplex, degree: int, reduced: bool = False) -> AbelianGroupInvariants:
    """``H_degree`` (reduced homology uses the augmented complex)."""
    if degree < 0:
        return AbelianGroupInvariants()
    d_in = boundary_matrix(complex, degree + 1)
    if degree == 0 and not reduced:
        d_out = zeros(0, len(complex.simplices(0)))
    else:
        d_out = boundary_matrix(complex, degree)
    return homology_invariants(d_in, d_out)


def reduced_homology(complex: SimplicialComplex, up_to: int | None = None) -> list[AbelianGroupInvariants]:
    top = complex.dimension if up_to is None else up_to
    return [homology(complex, m, reduced=True) for m in range(top + 1)]


def cohomology_invariants(complex: SimplicialComplex, degree: int) -> AbelianGroupInvariants:
    """``H^degree_Δ(K; Z)`` from the coboundary matrices."""
    if degree < 0:
        return AbelianGroupInvariants()
    d_out = coboundary_matrix(complex, degree)
    if degree == 0:
        d_in = zeros(len(complex.simplices(0)), 0)
    else:
        d_in = coboundary_matrix(complex, degree - 1)
    return homology_invariants(d_in, d_out)
