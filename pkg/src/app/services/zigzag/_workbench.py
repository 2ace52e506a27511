"""High-level entry points over the zig-zag core, configured by settings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .common.exceptions import UsageError
from .common.logger import logger
from .core.cech import CechCocycleZ
from .core.chase import (
    TheoremCertificate,
    cech_cohomology,
    certify_all,
    certify_restriction,
    cohomology_generators,
    evaluation_cocycle,
    zigzag_chase,
)
from .core.cover import GroundSetCover, SaturatedCoverDatum, nerve, saturate, star_cover
from .core.simplicial import Cochain, SimplicialComplex, cohomology_invariants
from .core.zint import AbelianGroupInvariants
from .io.parser import ComplexDocument, CoverDocument, load_document
from .models.general_settings import ZigzagGeneralSettings

BUNDLED_CORPUS = Path(__file__).resolve().parents[2] / "corpus"
SUFFIXES = (".complex", ".cover")


@dataclass(frozen=True)
class Workspace:
    """A loaded input with everything derived from it.

    ``original`` is set for literal covers; ``space`` for complexes and star covers.
    """

    name: str
    datum: SaturatedCoverDatum
    original: GroundSetCover | None = None
    space: SimplicialComplex | None = None

    @property
    def restricted(self) -> bool:
        """Literal cover whose saturation added members."""
        return self.original is not None and len(self.original.members) != len(self.datum.indices)

    @cached_property
    def base_nerve(self) -> SimplicialComplex:
        """Nerve of the cover as given: the original cover for literal covers."""
        return nerve(self.original) if self.original is not None else self.datum.nerve


@dataclass(frozen=True)
class GroupSummary:
    degree: int
    cech: AbelianGroupInvariants
    nerve: AbelianGroupInvariants
    space: AbelianGroupInvariants | None
    generators: int


@dataclass(frozen=True)
class ChaseResult:
    generator: int
    order: int
    alpha: Cochain
    chased: CechCocycleZ
    evaluated: CechCocycleZ


class ZigzagWorkbench:
    """Resolves inputs, builds saturated data and runs chases and certificates."""

    def __init__(self, settings: ZigzagGeneralSettings | None = None) -> None:
        self.settings = settings or ZigzagGeneralSettings()

    @property
    def corpus_dir(self) -> Path:
        return self.settings.CORPUS_DIR or BUNDLED_CORPUS

    def corpus_files(self) -> list[Path]:
        if not self.corpus_dir.is_dir():
            raise UsageError(f"corpus directory {self.corpus_dir} does not exist")
        return sorted(p for p in self.corpus_dir.iterdir() if p.suffix in SUFFIXES)

    def resolve(self, target: str | Path) -> Path:
        """A path as given, else a corpus entry by name.

        Raises:
            UsageError: If neither exists.
        """
        path = Path(target)
        if path.is_file():
            return path
        for suffix in SUFFIXES:
            candidate = self.corpus_dir / f"{target}{suffix}"
            if candidate.is_file():
                return candidate
        raise UsageError(f"no file or corpus entry named {str(target)!r}")

    def load(self, target: str | Path) -> ComplexDocument | CoverDocument:
        return load_document(self.resolve(target))

    def workspace(self, target: str | Path | ComplexDocument | CoverDocument) -> Workspace:
        document = target if isinstance(target, ComplexDocument | CoverDocument) else self.load(target)
        if isinstance(document, CoverDocument) and document.star_of is not None:
            base = self.load(document.star_of)
            if not isinstance(base, ComplexDocument):
                raise UsageError(f"'starcover of {document.star_of}' must name a complex")
            return Workspace(document.name, star_cover(base.complex, name=document.name), space=base.complex)
        if isinstance(document, ComplexDocument):
            name = document.name
            return Workspace(name, star_cover(document.complex, name=name), space=document.complex)
        if document.cover is None:
            raise UsageError(f"{document.name}: cover file without members")
        _, datum = saturate(document.cover, name=document.name)
        return Workspace(document.name, datum, original=document.cover)

    # --- computations ---------------------------------------------------------

    def _check_degree(self, k: int) -> None:
        if k < 0:
            raise UsageError(f"degree {k} is negative")

    @property
    def oracle_max_dimension(self) -> int:
        """Degrees cross-checked against the brute-force chain chase."""
        chase = self.settings.chase
        return min(chase.ORACLE_MAX_DIMENSION, chase.MAX_DEGREE)

    def degrees(self, ws: Workspace, k: int | None = None) -> list[int]:
        """``[k]`` when given, otherwise every degree up to the dimension of the input.

        Degrees above the dimension are allowed and have trivial groups.
        """
        if k is not None:
            self._check_degree(k)
            return [k]
        top = ws.space.dimension if ws.space is not None else ws.base_nerve.dimension
        return list(range(0, top + 1))

    def groups(self, ws: Workspace, k: int) -> GroupSummary:
        self._check_degree(k)
        space = cohomology_invariants(ws.space, k) if ws.space is not None else None
        return GroupSummary(
            degree=k,
            cech=cech_cohomology(ws.datum, k),
            nerve=cohomology_invariants(ws.base_nerve, k),
            space=space,
            generators=len(cohomology_generators(ws.datum.nerve, k)),
        )

    def chase(self, ws: Workspace, k: int) -> list[ChaseResult]:
        self._check_degree(k)
        oracle = self.oracle_max_dimension
        results = []
        for i, (alpha, order) in enumerate(cohomology_generators(ws.datum.nerve, k)):
            chased = zigzag_chase(ws.datum, alpha, k, oracle)
            results.append(ChaseResult(i, order, alpha, chased, evaluation_cocycle(ws.datum, alpha, k)))
        logger.info(f"chased {len(results)} generators of degree {k} on {ws.name}")
        return results

    def certify(self, ws: Workspace, k: int) -> list[TheoremCertificate]:
        """One certificate per generator; literal covers are certified through their saturation.

        Raises:
            CertificationFailure: For the first generator without a witness.
        """
        self._check_degree(k)
        if ws.restricted and ws.original is not None:
            oracle = self.oracle_max_dimension
            return [
                certify_restriction(ws.original, ws.datum, alpha, k, oracle)
                for alpha, _ in cohomology_generators(ws.datum.nerve, k)
            ]
        return certify_all(ws.datum, k, self.settings.chase.WORKERS, self.oracle_max_dimension)
