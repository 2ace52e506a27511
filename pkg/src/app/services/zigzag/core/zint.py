"""
Exact integer matrix algebra.

Matrices are dense numpy arrays of dtype ``object`` holding Python ints, so
every entry is an arbitrary-precision integer and no intermediate overflows.
This module provides the Smith normal form (with unimodular transforms and
their inverses), a Hermite-form based solver for ``A @ x = b`` over the
integers, and the invariants of homology groups of integer chain complexes.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import numpy.typing as npt

from ..common.exceptions import ChainComplexError, InvariantViolation
from ..common.logger import logger

type IntMatrix = npt.NDArray[np.object_]
type IntVector = npt.NDArray[np.object_]

_to_int = np.frompyfunc(int, 1, 1)


def int_matrix(rows: Iterable[Iterable[int]] | npt.ArrayLike, shape: tuple[int, int] | None = None) -> IntMatrix:
    """Build a 2-D object array of Python ints.

    Args:
        rows: Nested rows, or any array-like of integers.
        shape: Required when the matrix has no entries (e.g. ``(0, 3)``).

    Raises:
        ValueError: If the rows do not form a rectangular 2-D array, or
            disagree with ``shape``.
    """
    if not isinstance(rows, np.ndarray):
        rows = [list(row) for row in rows]  # type: ignore[union-attr]
    array = np.array(rows, dtype=object)
    if array.size == 0:
        if shape is None:
            if array.ndim == 2:  # noqa: PLR2004
                return zeros(*array.shape)
            raise ValueError("shape is required for an empty matrix")
        return zeros(*shape)
    if array.ndim != 2:  # noqa: PLR2004
        raise ValueError(f"expected a 2-D matrix, got {array.ndim} dimension(s)")
    if shape is not None and array.shape != shape:
        raise ValueError(f"matrix shape {array.shape} does not match {shape}")
    return np.asarray(_to_int(array), dtype=object)


def int_vector(values: Iterable[int] | npt.ArrayLike) -> IntVector:
    if not isinstance(values, np.ndarray):
        values = list(values)  # type: ignore[arg-type]
    vector = np.array(values, dtype=object)
    if vector.size == 0:
        return np.zeros(0, dtype=object)
    if vector.ndim != 1:
        raise ValueError(f"expected a vector, got {vector.ndim} dimension(s)")
    return np.asarray(_to_int(vector), dtype=object)


def zeros(rows: int, cols: int) -> IntMatrix:
    return np.zeros((rows, cols), dtype=object)


def identity(n: int) -> IntMatrix:
    return np.eye(n, dtype=int).astype(object)


def matmul(a: npt.NDArray[Any], b: npt.NDArray[Any]) -> npt.NDArray[np.object_]:
    """Exact product; tolerates empty inner dimensions."""
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"cannot multiply shapes {a.shape} and {b.shape}")
    if a.shape[-1] == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=object)
    return np.asarray(np.dot(a, b), dtype=object)


def is_zero(a: npt.NDArray[Any]) -> bool:
    return bool(a.size == 0 or np.all(a == 0))


# ==============================================================================
# SMITH NORMAL FORM
# ==============================================================================


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form.

    ``u_inverse`` and ``v_inverse`` are the exact inverses of ``U`` and ``V``.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    u_inverse: IntMatrix
    v_inverse: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


class _Reducer:
    """Row/column operations on D, mirrored on the transforms when tracked."""

    def __init__(self, a: IntMatrix, track: bool) -> None:
        self.D = int_matrix(a, shape=a.shape).copy()
        m, n = self.D.shape
        self.track = track
        if track:
            self.U, self.u_inv = identity(m), identity(m)
            self.V, self.v_inv = identity(n), identity(n)

    def swap_rows(self, a: int, b: int) -> None:
        if a == b:
            return
        self.D[[a, b]] = self.D[[b, a]]
        if self.track:
            self.U[[a, b]] = self.U[[b, a]]
            self.u_inv[:, [a, b]] = self.u_inv[:, [b, a]]

    def swap_cols(self, a: int, b: int) -> None:
        if a == b:
            return
        self.D[:, [a, b]] = self.D[:, [b, a]]
        if self.track:
            self.V[:, [a, b]] = self.V[:, [b, a]]
            self.v_inv[[a, b]] = self.v_inv[[b, a]]

    def negate_row(self, t: int) -> None:
        self.D[t] = -self.D[t]
        if self.track:
            self.U[t] = -self.U[t]
            self.u_inv[:, t] = -self.u_inv[:, t]

    def add_row(self, target: int, source: int) -> None:
        """row[target] += row[source]"""
        self.D[target] = self.D[target] + self.D[source]
        if self.track:
            self.U[target] = self.U[target] + self.U[source]
            self.u_inv[:, source] = self.u_inv[:, source] - self.u_inv[:, target]

    def eliminate_column(self, t: int) -> None:
        """Subtract floor multiples of row t from every row below it."""
        q = self.D[t + 1 :, t] // self.D[t, t]
        if is_zero(q):
            return
        self.D[t + 1 :] = self.D[t + 1 :] - np.multiply.outer(q, self.D[t])
        if self.track:
            self.U[t + 1 :] = self.U[t + 1 :] - np.multiply.outer(q, self.U[t])
            self.u_inv[:, t] = self.u_inv[:, t] + matmul(self.u_inv[:, t + 1 :], q)

    def eliminate_row(self, t: int) -> None:
        """Subtract floor multiples of column t from every column right of it."""
        q = self.D[t, t + 1 :] // self.D[t, t]
        if is_zero(q):
            return
        self.D[:, t + 1 :] = self.D[:, t + 1 :] - np.multiply.outer(self.D[:, t], q)
        if self.track:
            self.V[:, t + 1 :] = self.V[:, t + 1 :] - np.multiply.outer(self.V[:, t], q)
            self.v_inv[t] = self.v_inv[t] + matmul(q, self.v_inv[t + 1 :])

    def reduce(self) -> None:
        m, n = self.D.shape
        for t in range(min(m, n)):
            block = self.D[t:, t:]
            nonzero = np.argwhere(block != 0)
            if nonzero.size == 0:
                break
            i, j = min(nonzero, key=lambda ij: abs(block[ij[0], ij[1]]))
            self.swap_rows(t, t + int(i))
            self.swap_cols(t, t + int(j))
            self._settle_pivot(t)
            if self.D[t, t] < 0:
                self.negate_row(t)

    def _settle_pivot(self, t: int) -> None:
        while True:
            self.eliminate_column(t)
            self.eliminate_row(t)

            column_rest = [(abs(self.D[i, t]), 0, i) for i in np.flatnonzero(self.D[t + 1 :, t] != 0) + t + 1]
            row_rest = [(abs(self.D[t, j]), 1, j) for j in np.flatnonzero(self.D[t, t + 1 :] != 0) + t + 1]
            if column_rest or row_rest:
                _, axis, index = min(column_rest + row_rest)
                if axis == 0:
                    self.swap_rows(t, int(index))
                else:
                    self.swap_cols(t, int(index))
                continue

            pivot = self.D[t, t]
            rest = self.D[t + 1 :, t + 1 :]
            offenders = np.argwhere((rest % pivot) != 0) if rest.size else np.empty((0, 2))
            if len(offenders):
                self.add_row(t, t + 1 + int(offenders[0][0]))
                continue
            return


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with smallest-absolute-value pivoting.

    Returns:
        SmithDecomposition with ``U @ a @ V == D``, nonnegative diagonal
        ``d1 | d2 | ...`` followed by zeros.
    """
    reducer = _Reducer(a, track=True)
    reducer.reduce()
    decomposition = SmithDecomposition(
        U=reducer.U, D=reducer.D, V=reducer.V, u_inverse=reducer.u_inv, v_inverse=reducer.v_inv
    )
    logger.debug(f"SNF of {a.shape[0]}x{a.shape[1]}: rank {decomposition.rank}")
    return decomposition


def invariant_factors(a: IntMatrix) -> list[int]:
    """Nonzero diagonal of the Smith form, without computing transforms."""
    reducer = _Reducer(a, track=False)
    reducer.reduce()
    return [int(reducer.D[i, i]) for i in range(min(reducer.D.shape)) if reducer.D[i, i] != 0]


def rank(a: IntMatrix) -> int:
    return len(invariant_factors(a))


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns spanning ``ker a``; they form a basis of a saturated sublattice."""
    snf = smith_normal_form(a)
    return np.asarray(snf.V[:, snf.rank :], dtype=object)


# ==============================================================================
# HERMITE FORM SOLVER
# ==============================================================================


class IntegerSolver:
    """Solves ``A @ x = b`` over the integers through a column Hermite form.

    ``A @ V == H`` with ``V`` unimodular and ``H`` in column echelon form:
    pivot ``t`` sits at ``(pivot_rows[t], t)``, is positive, everything to its
    right in that row is zero and everything to its left is reduced modulo it.
    The factorisation is computed once and reused for every right-hand side.
    """

    def __init__(self, a: IntMatrix) -> None:
        self.A = int_matrix(a, shape=a.shape)
        m, n = self.A.shape
        h, v = self.A.copy(), identity(n)
        pivot_rows: list[int] = []
        c = 0
        for r in range(m):
            if c >= n:
                break
            while True:
                nonzero = np.flatnonzero(h[r, c:] != 0) + c
                if nonzero.size == 0:
                    break
                j0 = int(min(nonzero, key=lambda j: abs(h[r, j])))
                if j0 != c:
                    h[:, [c, j0]] = h[:, [j0, c]]
                    v[:, [c, j0]] = v[:, [j0, c]]
                others = np.flatnonzero(h[r, c + 1 :] != 0) + c + 1
                if others.size == 0:
                    break
                q = h[r, others] // h[r, c]
                h[:, others] = h[:, others] - np.multiply.outer(h[:, c], q)
                v[:, others] = v[:, others] - np.multiply.outer(v[:, c], q)
            if h[r, c] == 0:
                continue
            if h[r, c] < 0:
                h[:, c] = -h[:, c]
                v[:, c] = -v[:, c]
            if c:
                q = h[r, :c] // h[r, c]
                h[:, :c] = h[:, :c] - np.multiply.outer(h[:, c], q)
                v[:, :c] = v[:, :c] - np.multiply.outer(v[:, c], q)
            pivot_rows.append(r)
            c += 1
        self.H: IntMatrix = h
        self.V: IntMatrix = v
        self.pivot_rows: tuple[int, ...] = tuple(pivot_rows)
        logger.debug(f"HNF of {m}x{n}: {len(pivot_rows)} pivots")

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def solve(self, b: Sequence[int] | IntVector) -> IntVector | None:
        """Return an integer ``x`` with ``A @ x == b``, or None when none exists.

        Raises:
            ValueError: If ``b`` has the wrong length.
            InvariantViolation: If a computed solution fails back-substitution.
        """
        rhs = int_vector(b)
        m, n = self.A.shape
        if rhs.shape != (m,):
            raise ValueError(f"right-hand side of length {rhs.shape[0]} for a {m}x{n} system")

        y = np.zeros(n, dtype=object)
        for t, r in enumerate(self.pivot_rows):
            residual = int(rhs[r]) - sum(int(self.H[r, s]) * int(y[s]) for s in range(t))
            quotient, remainder = divmod(residual, int(self.H[r, t]))
            if remainder != 0:
                return None
            y[t] = quotient
        if not np.all(matmul(self.H, y) == rhs):
            return None

        x = matmul(self.V, y)
        if not np.all(matmul(self.A, x) == rhs):
            raise InvariantViolation("solution failed back-substitution")
        return x


def solve_linear(a: IntMatrix, b: Sequence[int] | IntVector) -> IntVector | None:
    """Integer solution of ``a @ x = b`` verified by multiplication, or None."""
    return IntegerSolver(a).solve(b)


# ==============================================================================
# ABELIAN GROUPS
# ==============================================================================


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """A finitely generated abelian group ``Z^rank + Z/t1 + Z/t2 + ...``."""

    rank: int = 0
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(t < 2 for t in self.torsion):  # noqa: PLR2004
            raise ValueError(f"torsion coefficients must be >= 2, got {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:], strict=False)):
            raise ValueError(f"torsion coefficients must form a divisibility chain: {self.torsion}")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def homology_invariants(d_in: IntMatrix, d_out: IntMatrix) -> AbelianGroupInvariants:
    """Invariants of ``ker(d_out) / im(d_in)``.

    Args:
        d_in: Incoming differential, shape ``(n, n_prev)``.
        d_out: Outgoing differential, shape ``(n_next, n)``.

    Raises:
        ChainComplexError: If the matrices do not compose or ``d_out @ d_in != 0``.
    """
    if d_in.shape[0] != d_out.shape[1]:
        raise ChainComplexError(
            f"non-composable differentials: {d_out.shape} after {d_in.shape}"
        )
    if not is_zero(matmul(d_out, d_in)):
        raise ChainComplexError("d_out @ d_in is not zero")

    factors = invariant_factors(d_in)
    free = d_in.shape[0] - rank(d_out) - len(factors)
    return AbelianGroupInvariants(rank=free, torsion=tuple(f for f in factors if f > 1))
