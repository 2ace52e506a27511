import random

import numpy as np
import pytest
from app.services.zigzag.common.exceptions import ChainError, ComplexError
from app.services.zigzag.core.simplicial import (
    EMPTY,
    Chain,
    Cochain,
    Simplex,
    SimplicialComplex,
    boundary,
    boundary_matrix,
    coboundary,
    coboundary_matrix,
    cohomology_invariants,
    evaluate,
    full_subcomplex,
    homology,
    reduced_homology,
)
from app.services.zigzag.core.zint import AbelianGroupInvariants, is_zero, matmul

Z = AbelianGroupInvariants(1)
ZERO = AbelianGroupInvariants()


@pytest.mark.unit
def test_downward_closure_and_canonical_order(triangle: SimplicialComplex) -> None:
    assert triangle.f_vector() == (3, 3)
    assert triangle.dimension == 1
    assert [str(s) for s in triangle.simplices(1)] == ["(x_a x_b)", "(x_a x_c)", "(x_b x_c)"]
    assert triangle.simplices(-1) == (EMPTY,)


@pytest.mark.unit
def test_vertex_order_is_the_listed_order() -> None:
    k = SimplicialComplex(["c", "a", "b"], [("a", "c")])
    assert k.simplices(1) == (Simplex(("c", "a")),)
    assert k.simplex("a", "c") == Simplex(("c", "a"))


@pytest.mark.unit
def test_from_maximal_closes_downward(solid_triangle: SimplicialComplex) -> None:
    k = SimplicialComplex.from_maximal(["a", "b", "c"], [("c", "b", "a"), ("a", "b")])
    assert k == solid_triangle
    assert k.f_vector() == (3, 3, 1)
    assert SimplicialComplex.from_maximal(["a", "b"], []).f_vector() == (2,)


@pytest.mark.unit
def test_malformed_complexes_are_rejected() -> None:
    with pytest.raises(ComplexError):
        SimplicialComplex(["a", "a"])
    with pytest.raises(ComplexError):
        SimplicialComplex(["a", "b"], [("a", "a")])
    with pytest.raises(ComplexError):
        SimplicialComplex(["a"], [("a", "z")])


@pytest.mark.unit
def test_simplex_lookup(triangle: SimplicialComplex) -> None:
    with pytest.raises(ComplexError):
        triangle.simplex("a", "b", "c")
    with pytest.raises(ChainError):
        triangle.index(Simplex(("a", "b", "c")))


@pytest.mark.unit
def test_boundary_of_a_triangle(solid_triangle: SimplicialComplex) -> None:
    face = Chain.basis(solid_triangle, Simplex(("a", "b", "c")))
    assert str(boundary(face)) == "(x_a x_b) - (x_a x_c) + (x_b x_c)"


@pytest.mark.unit
def test_boundary_squares_to_zero(tetrahedron: SimplicialComplex) -> None:
    for simplex in tetrahedron:
        if simplex.dim < 1:
            continue
        chain = Chain.basis(tetrahedron, simplex)
        assert not boundary(boundary(chain), augmented=True)


@pytest.mark.unit
def test_augmented_boundary_of_zero_chains(triangle: SimplicialComplex) -> None:
    c = Chain(triangle, 0, {Simplex(("a",)): 2, Simplex(("b",)): -1})
    with pytest.raises(ChainError):
        boundary(c)
    assert boundary(c, augmented=True) == Chain(triangle, -1, {EMPTY: 1})
    with pytest.raises(ChainError):
        boundary(Chain(triangle, -1, {EMPTY: 1}), augmented=True)


@pytest.mark.unit
def test_matrices_compose_to_zero(tetrahedron: SimplicialComplex) -> None:
    for degree in range(1, 4):
        assert is_zero(matmul(boundary_matrix(tetrahedron, degree - 1), boundary_matrix(tetrahedron, degree)))
    assert np.array_equal(coboundary_matrix(tetrahedron, 1), boundary_matrix(tetrahedron, 2).T)


@pytest.mark.unit
def test_coboundary_is_dual_to_boundary(solid_triangle: SimplicialComplex) -> None:
    phi = Cochain(solid_triangle, 1, {Simplex(("a", "b")): 1, Simplex(("b", "c")): 5})
    face = Chain.basis(solid_triangle, Simplex(("a", "b", "c")))
    assert evaluate(coboundary(phi), face) == evaluate(phi, boundary(face))
    assert coboundary(phi)[Simplex(("a", "b", "c"))] == 6


@pytest.mark.unit
def test_coboundary_of_degree_minus_one_is_constant(triangle: SimplicialComplex) -> None:
    unit = Cochain(triangle, -1, {EMPTY: 3})
    assert coboundary(unit) == Cochain(triangle, 0, {s: 3 for s in triangle.simplices(0)})


@pytest.mark.unit
def test_chain_arithmetic_prunes_zeros(triangle: SimplicialComplex) -> None:
    c = Chain.basis(triangle, Simplex(("a", "b")), 2)
    assert not c + (-c)
    assert 3 * c == Chain(triangle, 1, {Simplex(("a", "b")): 6})
    assert str(c - Chain.basis(triangle, Simplex(("b", "c")))) == "2(x_a x_b) - (x_b x_c)"
    with pytest.raises(ChainError):
        c + Chain.basis(triangle, Simplex(("a",)))


@pytest.mark.unit
def test_vector_round_trip_uses_the_canonical_basis(triangle: SimplicialComplex) -> None:
    phi = Cochain.from_vector(triangle, 1, [1, 0, -2])
    assert phi.values == {Simplex(("a", "b")): 1, Simplex(("b", "c")): -2}
    assert list(phi.to_vector()) == [1, 0, -2]
    with pytest.raises(ChainError):
        Cochain.from_vector(triangle, 1, [1, 2])


@pytest.mark.unit
def test_evaluation_checks_degrees(triangle: SimplicialComplex) -> None:
    phi = Cochain.basis(triangle, Simplex(("a",)))
    with pytest.raises(ChainError):
        evaluate(phi, Chain.basis(triangle, Simplex(("a", "b"))))
    assert phi(Chain.basis(triangle, Simplex(("a",)), 4)) == 4


@pytest.mark.unit
def test_chains_reject_foreign_simplices(triangle: SimplicialComplex) -> None:
    with pytest.raises(ChainError):
        Chain(triangle, 2, {Simplex(("a", "b", "c")): 1})
    with pytest.raises(ChainError):
        Chain(triangle, 1, {Simplex(("a",)): 1})
    with pytest.raises(ChainError):
        Chain(triangle, -2)


@pytest.mark.unit
def test_full_subcomplex_and_inclusion(solid_triangle: SimplicialComplex) -> None:
    edge = full_subcomplex(solid_triangle, ["a", "c"])
    assert edge.f_vector() == (2, 1)
    assert edge.is_subcomplex_of(solid_triangle)
    assert not SimplicialComplex(["c", "a"]).is_subcomplex_of(solid_triangle)
    with pytest.raises(ComplexError):
        full_subcomplex(solid_triangle, ["z"])


@pytest.mark.unit
def test_cochain_restriction(solid_triangle: SimplicialComplex) -> None:
    edge = full_subcomplex(solid_triangle, ["a", "b"])
    phi = Cochain(solid_triangle, 1, {Simplex(("a", "b")): 2, Simplex(("b", "c")): 1})
    assert phi.restrict(edge) == Cochain(edge, 1, {Simplex(("a", "b")): 2})


@pytest.mark.unit
def test_homology_of_circle(triangle: SimplicialComplex) -> None:
    assert homology(triangle, 0) == Z
    assert homology(triangle, 1) == Z
    assert reduced_homology(triangle) == [ZERO, Z]


@pytest.mark.unit
def test_homology_of_projective_plane(rp2: SimplicialComplex) -> None:
    assert rp2.f_vector() == (6, 15, 10)
    assert homology(rp2, 1) == AbelianGroupInvariants(0, (2,))
    assert homology(rp2, 2) == ZERO
    assert cohomology_invariants(rp2, 1) == ZERO
    assert cohomology_invariants(rp2, 2) == AbelianGroupInvariants(0, (2,))


@pytest.mark.unit
def test_cohomology_of_torus(torus: SimplicialComplex) -> None:
    assert torus.f_vector() == (7, 21, 14)
    assert cohomology_invariants(torus, 0) == Z
    assert cohomology_invariants(torus, 1) == AbelianGroupInvariants(2)
    assert cohomology_invariants(torus, 2) == Z


@pytest.mark.unit
def test_solid_simplex_is_acyclic(tetrahedron: SimplicialComplex) -> None:
    assert all(group.is_trivial for group in reduced_homology(tetrahedron))
    assert cohomology_invariants(tetrahedron, 3) == ZERO


@pytest.fixture
def sphere() -> SimplicialComplex:
    """Boundary of the tetrahedron."""
    return SimplicialComplex(list("abcd"), [tuple(face) for face in ("abc", "abd", "acd", "bcd")])


@pytest.mark.unit
def test_coboundary_squares_to_zero_on_the_sphere(sphere: SimplicialComplex) -> None:
    rng = random.Random(13)
    assert cohomology_invariants(sphere, 2) == Z
    assert cohomology_invariants(sphere, 1) == ZERO
    assert not coboundary(coboundary(Cochain(sphere, -1, {EMPTY: 3})))
    for degree in (0, 1):
        for simplex in sphere.simplices(degree):
            assert not coboundary(coboundary(Cochain.basis(sphere, simplex)))
        for _ in range(10):
            phi = Cochain(sphere, degree, {s: rng.randint(-5, 5) for s in sphere.simplices(degree)})
            assert not coboundary(coboundary(phi))


@pytest.mark.unit
def test_pairing_is_adjoint_on_random_cochains(torus: SimplicialComplex, rp2: SimplicialComplex) -> None:
    rng = random.Random(11)
    for complex in (torus, rp2):
        for degree in range(complex.dimension):
            for _ in range(20):
                phi = Cochain(complex, degree, {s: rng.randint(-4, 4) for s in complex.simplices(degree)})
                c = Chain(complex, degree + 1, {s: rng.randint(-4, 4) for s in complex.simplices(degree + 1)})
                assert evaluate(coboundary(phi), c) == evaluate(phi, boundary(c))


@pytest.mark.unit
def test_full_subcomplex_is_idempotent_and_monotone(torus: SimplicialComplex) -> None:
    small, large = ["0", "1", "3"], ["0", "1", "2", "3", "5"]
    inner = full_subcomplex(torus, small)
    outer = full_subcomplex(torus, large)
    assert inner.f_vector() == (3, 3, 1)
    assert full_subcomplex(inner, small) == inner
    assert full_subcomplex(torus, torus.labels) == torus
    assert inner.is_subcomplex_of(outer)
    assert outer.is_subcomplex_of(torus)
    assert full_subcomplex(outer, small) == inner
