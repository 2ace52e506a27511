import pytest
from app.services.zigzag.core.cover import GroundSetCover
from app.services.zigzag.core.orders import admissible_orders, check_order_independence, transport
from app.services.zigzag.core.simplicial import Simplex, SimplicialComplex


@pytest.mark.unit
def test_transport_applies_the_orientation_sign() -> None:
    source = SimplicialComplex(["b", "a", "c"], [("b", "a", "c")])
    target = SimplicialComplex(["a", "b", "c"], [("a", "b", "c")])
    moved = transport({Simplex(("b", "a")): 3, Simplex(("b", "a", "c")): 1, Simplex(("c",)): 2}, source, target)
    assert moved == {Simplex(("a", "b")): -3, Simplex(("a", "b", "c")): -1, Simplex(("c",)): 2}


@pytest.mark.unit
def test_admissible_orders_keep_originals_first(three_arc: GroundSetCover) -> None:
    orders = admissible_orders(three_arc, trials=8, seed=1)
    assert 1 <= len(orders) <= 6
    assert len(set(orders)) == len(orders)
    for order in orders:
        assert order[:3] == ("A", "B", "C")
        assert set(order[3:]) == {"A&B", "A&C", "B&C"}


@pytest.mark.unit
def test_admissible_orders_are_seeded(three_arc: GroundSetCover) -> None:
    assert admissible_orders(three_arc, trials=4, seed=5) == admissible_orders(three_arc, trials=4, seed=5)


@pytest.mark.unit
def test_chase_does_not_depend_on_the_saturation_order(three_arc: GroundSetCover) -> None:
    trials = check_order_independence(three_arc, 1, trials=3, seed=2)
    assert trials
    assert all(p.generators == 1 for p in trials)
    assert all(p.all_cohomologous for p in trials)
