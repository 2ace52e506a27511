"""
Exactness of the homology double complex, checked degree by degree.

Column ``b`` is the augmented chain complex of the subnerve ``N_b`` and only
depends on ``hat(b)``, so it is checked once per index. The row of inner
degree ``m`` splits over the nerve ``m``-simplices ``s``: the summand of ``s``
is the augmented chain complex of ``{b : s in N_b}``, the full simplex on the
indices whose members contain every member of ``s``. The first row and the
first column are not expected to be exact and are not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..common.logger import logger
from .cover import SaturatedCoverDatum
from .simplicial import Simplex, SimplicialComplex, boundary_matrix, full_subcomplex, homology
from .zint import AbelianGroupInvariants, homology_invariants, zeros


@dataclass(frozen=True)
class ExactnessEntry:
    axis: Literal["row", "column"]
    key: str
    position: int
    invariants: AbelianGroupInvariants

    @property
    def exact(self) -> bool:
        return self.invariants.is_trivial


@dataclass(frozen=True)
class ExactnessReport:
    max_total_degree: int
    entries: tuple[ExactnessEntry, ...]

    @property
    def exact(self) -> bool:
        return all(entry.exact for entry in self.entries)

    @property
    def failures(self) -> tuple[ExactnessEntry, ...]:
        return tuple(entry for entry in self.entries if not entry.exact)


def augmented_homology(complex: SimplicialComplex, degree: int) -> AbelianGroupInvariants:
    """Homology of ``... -> C_0 -> Z -> 0`` at ``degree >= -1``."""
    if degree == -1:
        return homology_invariants(boundary_matrix(complex, 0), zeros(0, 1))
    return homology(complex, degree, reduced=True)


def _row_support(d: SaturatedCoverDatum, s: Simplex) -> frozenset[str]:
    return frozenset(i for i in d.indices if all(d.includes(j, i) for j in s))


def exactness_report(d: SaturatedCoverDatum, max_total_degree: int = 4) -> ExactnessReport:
    """Check every column at inner degrees ``-1..max`` and every row ``m >= 0`` at Čech degrees ``0..max-m``."""
    entries: list[ExactnessEntry] = []

    for index in d.indices:
        local = d.subnerve(Simplex((index,)))
        for m in range(-1, max_total_degree + 1):
            entries.append(ExactnessEntry("column", index, m, augmented_homology(local, m)))

    rows: dict[tuple[frozenset[str], int], AbelianGroupInvariants] = {}
    for m in range(0, max_total_degree + 1):
        for s in d.nerve.simplices(m):
            support = _row_support(d, s)
            for k in range(0, max_total_degree - m + 1):
                if (support, k) not in rows:
                    rows[support, k] = augmented_homology(full_subcomplex(d.nerve, support), k)
                entries.append(ExactnessEntry("row", str(s), k, rows[support, k]))

    report = ExactnessReport(max_total_degree, tuple(entries))
    failures = len(report.failures)
    logger.info(
        f"exactness of {d.name or 'datum'} up to total degree {max_total_degree}: "
        f"{len(entries)} positions, {'exact' if not failures else f'{failures} not exact'}"
    )
    return report

