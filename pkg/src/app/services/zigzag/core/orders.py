"""
Probing whether the chase depends on the order chosen for a saturation.

Alternative admissible orders are random linear extensions of reverse
inclusion that keep the original members in their given order. Cochains are
carried between two orderings of the same nerve by the orientation sign of
the sorting permutation of each simplex.
"""

from __future__ import annotations

import random
from collections.abc import Mapping
from dataclasses import dataclass

from sympy.combinatorics import Permutation

from ..common.logger import logger
from .cech import CechCocycleZ
from .chase import coboundary_solver, cocycle_representatives, find_witness, zigzag_chase
from .cover import GroundSetCover, SaturatedCoverDatum, linear_extension, saturate, saturation_candidates
from .simplicial import Cochain, Simplex, SimplicialComplex


@dataclass(frozen=True)
class OrderTrial:
    order: tuple[str, ...]
    k: int
    generators: int
    cohomologous: int

    @property
    def all_cohomologous(self) -> bool:
        return self.generators == self.cohomologous


def admissible_orders(c: GroundSetCover, trials: int = 3, seed: int = 0) -> list[tuple[str, ...]]:
    """Up to ``trials`` distinct random admissible orders of the saturation of ``c``."""
    rng = random.Random(seed)
    candidates = saturation_candidates(c)
    found: list[tuple[str, ...]] = []
    for _ in range(trials):
        keys = {x.label: rng.random() for x in candidates}
        order = tuple(x.label for x in linear_extension(candidates, lambda x, keys=keys: (keys[x.label],)))
        if order not in found:
            found.append(order)
    return found


def _reordered(c: GroundSetCover, order: tuple[str, ...], name: str) -> SaturatedCoverDatum:
    rank = {label: i for i, label in enumerate(order)}
    _, datum = saturate(c, name=name, priority=lambda x: (rank[x.label],))
    return datum


def transport(values: Mapping[Simplex, int], source: SimplicialComplex, target: SimplicialComplex) -> dict[Simplex, int]:
    """Values on ``source``-ordered simplices rewritten for the ``target`` vertex order."""
    moved: dict[Simplex, int] = {}
    for simplex, value in values.items():
        ordered = target.sort(simplex.vertices)
        sign = Permutation([simplex.vertices.index(v) for v in ordered]).signature() if len(ordered) > 1 else 1
        moved[Simplex(ordered)] = sign * value
    return moved


def check_order_independence(
    c: GroundSetCover, k: int, trials: int = 3, seed: int = 0, oracle_max_dimension: int | None = 3
) -> list[OrderTrial]:
    """Chase every ``H^k`` generator under alternative orders and compare up to coboundaries."""
    _, reference = saturate(c, name="reference")
    alphas = cocycle_representatives(reference.nerve, k)
    chased = [zigzag_chase(reference, alpha, k, oracle_max_dimension) for alpha in alphas]
    solver = coboundary_solver(reference, k)

    results = []
    for order in admissible_orders(c, trials, seed):
        other = _reordered(c, order, name="reordered")
        agree = 0
        for alpha, expected in zip(alphas, chased, strict=True):
            moved = Cochain(other.nerve, k, transport(alpha.terms, reference.nerve, other.nerve))
            result = zigzag_chase(other, moved, k, oracle_max_dimension)
            back = CechCocycleZ(reference.nerve, k, transport(result.values, other.nerve, reference.nerve))
            if find_witness(expected - back, solver) is not None:
                agree += 1
        results.append(OrderTrial(order, k, len(alphas), agree))
        logger.info(f"order trial {'/'.join(order)}: {agree} of {len(alphas)} generators cohomologous")
    return results
