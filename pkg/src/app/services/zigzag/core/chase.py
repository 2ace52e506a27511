"""
Certifying that the zig-zag chase of a cocycle agrees with signed evaluation.

The chase starts from a closed ``k``-cochain ``α`` on the nerve, moves it
into the first column of the cohomology double complex and alternates the
Čech differential with the dual cone ``k + 1`` times. The result is an integer
Čech cocycle which must be cohomologous to ``b -> sign(k) α(x_b)``. A
certificate carries an explicit integral witness ``x`` with
``δ̌x = chased - evaluated``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import partial

import anyio
from anyio import CapacityLimiter, to_thread

from ..common.decorators import ErrorStrategy, handle_zigzag_exceptions
from ..common.exceptions import CertificationFailure, ChainError, CoverError, InvariantViolation
from ..common.logger import logger
from .cech import (
    CechCochain,
    CechCocycleZ,
    cech_coaugmentation,
    cech_cone_dual,
    cech_delta,
    cech_delta_matrix,
    iterated_chase_bruteforce,
    palindromic_sign,
    witness_from_solution,
    witness_solver,
)
from .cover import GroundSetCover, SaturatedCoverDatum, nerve
from .simplicial import EMPTY, Cochain, SimplicialComplex, coboundary, coboundary_matrix
from .zint import (
    AbelianGroupInvariants,
    IntegerSolver,
    homology_invariants,
    int_matrix,
    matmul,
    smith_normal_form,
    zeros,
)


@dataclass(frozen=True)
class Counterexample:
    """Everything needed to reproduce a failed certificate."""

    datum: str
    k: int
    alpha: Cochain
    chased: CechCocycleZ
    evaluated: CechCocycleZ

    def dump(self) -> str:
        lines = [f"datum={self.datum or '-'} k={self.k}"]
        lines.append(f"alpha: {self.alpha}")
        lines.append(f"chased: {self.chased}")
        lines.append(f"evaluated: {self.evaluated}")
        return "\n".join(lines)


@dataclass(frozen=True)
class TheoremCertificate:
    """``δ̌(witness) == chased - evaluated``, re-verified on construction.

    In inner degree -1 a Čech cochain of bidegree ``(k - 1, -1)`` is one integer
    per nerve ``(k-1)``-simplex, so the witness is stored as that cochain on the
    nerve, like `CechCocycleZ`. In degree 0 it is the zero cochain on the empty
    simplex and the two cocycles must agree exactly.

    Raises:
        InvariantViolation: If the degrees, the sign or the witness identity do not check out.
    """

    k: int
    alpha: Cochain
    chased: CechCocycleZ
    evaluated: CechCocycleZ
    sign: int
    witness: Cochain
    all_checked: bool = field(init=False, default=False)

    def __post_init__(self) -> None:
        if {self.alpha.degree, self.chased.k, self.evaluated.k, self.witness.degree + 1} != {self.k}:
            raise InvariantViolation(f"certificate parts do not all sit in degree {self.k}")
        if self.sign != palindromic_sign(self.k):
            raise InvariantViolation(f"sign {self.sign} is not the palindromic sign of degree {self.k}")
        if self.k == 0 and self.witness:
            raise InvariantViolation("a degree 0 certificate has no room for a nonzero witness")
        if coboundary(self.witness, self.chased.nerve) != (self.chased - self.evaluated).cochain:
            raise InvariantViolation(f"δ̌ of the witness is not chased - evaluated in degree {self.k}")
        object.__setattr__(self, "all_checked", True)

    def cech_witness(self, d: SaturatedCoverDatum) -> CechCochain | None:
        """The witness as a Čech cochain of bidegree ``(k - 1, -1)`` over ``d``; None in degree 0."""
        if self.k == 0:
            return None
        parts = {b: Cochain(d.subnerve(b), -1, {EMPTY: v}) for b, v in self.witness.terms.items()}
        return CechCochain(d, self.k - 1, -1, parts)


def _nerve_of(target: SaturatedCoverDatum | SimplicialComplex) -> SimplicialComplex:
    return target.nerve if isinstance(target, SaturatedCoverDatum) else target


def _closed_on(nerve: SimplicialComplex, alpha: Cochain, k: int) -> Cochain:
    if alpha.degree != k:
        raise ChainError(f"expected a degree {k} cochain, got degree {alpha.degree}")
    if alpha.complex is not nerve:
        alpha = alpha.rehome(nerve)
    if coboundary(alpha):
        raise ChainError(f"α is not a cocycle: δα = {coboundary(alpha)}")
    return alpha


def zigzag_chase(
    d: SaturatedCoverDatum, alpha: Cochain, k: int, oracle_max_dimension: int | None = 3
) -> CechCocycleZ:
    """``(C^v δ̌)^(k+1)`` applied to ``α`` in the first column.

    Up to ``oracle_max_dimension`` the result is cross-checked against
    ``b -> α(iterated_chase_bruteforce(b))``.

    Raises:
        ChainError: If ``α`` is not a closed ``k``-cochain on the nerve.
        InvariantViolation: If the two chase formulations disagree.
    """
    alpha = _closed_on(d.nerve, alpha, k)
    element = cech_cone_dual(cech_coaugmentation(d, alpha))
    while element.inner_degree >= 0:
        element = cech_cone_dual(cech_delta(element))
    chased = CechCocycleZ.from_cech(element)

    if oracle_max_dimension is not None and k <= oracle_max_dimension:
        for b in d.nerve.simplices(k):
            expected = alpha(iterated_chase_bruteforce(d, b))
            if chased[b] != expected:
                raise InvariantViolation(f"dual chase gives {chased[b]} on {b}, the chain chase {expected}")
    logger.debug(f"chased degree {k} cocycle on {d.name or 'datum'}: {len(chased.values)} nonzero values")
    return chased


def evaluation_cocycle(
    target: SaturatedCoverDatum | SimplicialComplex, alpha: Cochain, k: int
) -> CechCocycleZ:
    """``b -> palindromic_sign(k) α((x_b0 ... x_bk))``"""
    nerve_ = _nerve_of(target)
    alpha = _closed_on(nerve_, alpha, k)
    sign = palindromic_sign(k)
    return CechCocycleZ(nerve_, k, {b: sign * value for b, value in alpha.terms.items()})


def coboundary_solver(target: SaturatedCoverDatum | SimplicialComplex, k: int) -> IntegerSolver:
    """Solver for ``δ̌x = y`` from Čech degree ``k - 1`` to ``k`` in inner degree -1."""
    return witness_solver(_nerve_of(target), k)


def find_witness(
    difference: CechCocycleZ, solver: IntegerSolver | None = None
) -> Cochain | None:
    """Integral ``x`` with ``δ̌x = difference``, re-verified, or None.

    In degree 0 only a vanishing difference has a witness.
    """
    solver = solver or coboundary_solver(difference.nerve, difference.k)
    solution = solver.solve(difference.cochain.to_vector())
    if solution is None:
        return None
    witness = witness_from_solution(difference.nerve, difference.k, solution)
    if coboundary(witness) != difference.cochain:
        raise InvariantViolation("witness failed re-verification")
    return witness


def _certificate(
    name: str,
    k: int,
    alpha: Cochain,
    chased: CechCocycleZ,
    evaluated: CechCocycleZ,
    solver: IntegerSolver | None,
) -> TheoremCertificate:
    witness = find_witness(chased - evaluated, solver)
    if witness is None:
        counterexample = Counterexample(name, k, alpha, chased, evaluated)
        raise CertificationFailure(
            f"no integral witness for degree {k} on {name or 'datum'}", counterexample=counterexample
        )
    return TheoremCertificate(
        k=k,
        alpha=alpha,
        chased=chased,
        evaluated=evaluated,
        sign=palindromic_sign(k),
        witness=witness,
    )


def certify_theorem(
    d: SaturatedCoverDatum,
    alpha: Cochain,
    k: int,
    solver: IntegerSolver | None = None,
    oracle_max_dimension: int | None = 3,
) -> TheoremCertificate:
    """Chase, evaluate and find a coboundary witness for the difference.

    Raises:
        CertificationFailure: If the difference is not an integral coboundary.
    """
    chased = zigzag_chase(d, alpha, k, oracle_max_dimension)
    evaluated = evaluation_cocycle(d, alpha, k)
    certificate = _certificate(d.name, k, alpha, chased, evaluated, solver)
    witness = certificate.cech_witness(d)
    if witness is not None and cech_delta(witness) != (chased - evaluated).to_cech(d):
        raise InvariantViolation(f"Čech witness does not bound chased - evaluated in degree {k}")
    logger.info(f"certified degree {k} class on {d.name or 'datum'}")
    return certificate


# ==============================================================================
# RESTRICTION ALONG A SATURATION
# ==============================================================================


def restrict_cocycle(z: CechCocycleZ, target: SimplicialComplex) -> CechCocycleZ:
    """Values on the simplices of a sub-nerve whose vertex order is inherited.

    Raises:
        CoverError: If ``target`` does not embed order-compatibly into ``z.nerve``.
    """
    if not target.is_subcomplex_of(z.nerve):
        raise CoverError("the original nerve does not embed into the saturated nerve with a compatible order")
    return CechCocycleZ(target, z.k, {b: v for b, v in z.values.items() if b in target})


def certify_restriction(
    original: GroundSetCover,
    saturated: SaturatedCoverDatum,
    alpha: Cochain,
    k: int,
    oracle_max_dimension: int | None = 3,
) -> TheoremCertificate:
    """Chase over the saturation, restrict to the original cover, compare with evaluation there."""
    small = nerve(original)
    chased = restrict_cocycle(zigzag_chase(saturated, alpha, k, oracle_max_dimension), small)
    alpha_small = _closed_on(saturated.nerve, alpha, k).restrict(small)
    evaluated = evaluation_cocycle(small, alpha_small, k)
    certificate = _certificate(saturated.name, k, alpha_small, chased, evaluated, None)
    logger.info(f"certified restricted degree {k} class on {saturated.name or 'datum'}")
    return certificate


# ==============================================================================
# GROUPS AND GENERATORS
# ==============================================================================


def cech_cohomology(d: SaturatedCoverDatum, k: int) -> AbelianGroupInvariants:
    """``ker δ̌ / im δ̌`` in inner degree -1, Čech degree ``k``."""
    if k < 0:
        return AbelianGroupInvariants()
    simplices = d.nerve.simplices
    d_out = int_matrix(cech_delta_matrix(d, k), shape=(len(simplices(k + 1)), len(simplices(k))))
    if k == 0:
        d_in = zeros(len(simplices(0)), 0)
    else:
        d_in = int_matrix(cech_delta_matrix(d, k - 1), shape=(len(simplices(k)), len(simplices(k - 1))))
    return homology_invariants(d_in, d_out)


def cohomology_generators(complex: SimplicialComplex, k: int) -> list[tuple[Cochain, int]]:
    """Closed cochains generating ``H^k``, with the order of each class (0 for free).

    The kernel of ``δ_k`` comes from the Smith form of ``δ_k``; the image of
    ``δ_(k-1)`` is rewritten in that kernel basis and diagonalised again.

    Raises:
        InvariantViolation: If a produced representative is not closed.
    """
    if k < 0 or k > complex.dimension:
        return []
    outgoing = smith_normal_form(coboundary_matrix(complex, k))
    kernel = outgoing.V[:, outgoing.rank :]
    if kernel.shape[1] == 0:
        return []
    incoming = zeros(len(complex.simplices(0)), 0) if k == 0 else coboundary_matrix(complex, k - 1)
    coordinates = matmul(outgoing.v_inverse, incoming)[outgoing.rank :, :]
    inner = smith_normal_form(coordinates)
    basis = matmul(kernel, inner.u_inverse)
    diagonal = inner.diagonal

    generators: list[tuple[Cochain, int]] = []
    for i in range(basis.shape[1]):
        order = diagonal[i] if i < len(diagonal) else 0
        if order == 1:
            continue
        cochain = Cochain.from_vector(complex, k, basis[:, i])
        if coboundary(cochain):
            raise InvariantViolation(f"generator {i} in degree {k} is not closed")
        generators.append((cochain, order))
    logger.debug(f"H^{k}: {len(generators)} generator(s), orders {[o for _, o in generators]}")
    return generators


def cocycle_representatives(complex: SimplicialComplex, k: int) -> list[Cochain]:
    return [cochain for cochain, _ in cohomology_generators(complex, k)]


# ==============================================================================
# CONCURRENT CERTIFICATES
# ==============================================================================


async def certify_generators(
    d: SaturatedCoverDatum,
    k: int,
    workers: int = 4,
    alphas: Sequence[Cochain] | None = None,
    oracle_max_dimension: int | None = 3,
) -> list[TheoremCertificate]:
    """Certificates for every generator of ``H^k`` of the nerve, in generator order.

    Each certificate runs in a worker thread; ``workers`` bounds how many run
    at once and all share one Hermite factorisation of δ̌. The first failure
    in generator order is raised after every worker has finished.
    """
    if alphas is None:
        alphas = cocycle_representatives(d.nerve, k)
    if not alphas:
        return []
    for b in d.nerve:  # warm the subnerve cache before threads share it
        d.subnerve(b)
    solver = coboundary_solver(d, k)
    limiter = CapacityLimiter(max(1, workers))
    outcomes: list[TheoremCertificate | Exception | None] = [None] * len(alphas)

    async def run(i: int, alpha: Cochain) -> None:
        job = partial(certify_theorem, d, alpha, k, solver, oracle_max_dimension)
        try:
            outcomes[i] = await to_thread.run_sync(job, limiter=limiter)
        except Exception as e:
            outcomes[i] = e

    async with anyio.create_task_group() as tg:
        for i, alpha in enumerate(alphas):
            tg.start_soon(run, i, alpha)

    certificates: list[TheoremCertificate] = []
    for outcome in outcomes:
        if isinstance(outcome, Exception):
            raise outcome
        if outcome is not None:
            certificates.append(outcome)
    return certificates


@handle_zigzag_exceptions(ErrorStrategy.STRICT)
def certify_all(
    d: SaturatedCoverDatum, k: int, workers: int = 4, oracle_max_dimension: int | None = 3
) -> list[TheoremCertificate]:
    """Blocking entry point for `certify_generators`."""
    return anyio.run(partial(certify_generators, d, k, workers, None, oracle_max_dimension))
