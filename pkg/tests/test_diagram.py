"""Unit tests for the core diagram type and mutation."""
import pytest

from diagmut.diagram import Diagram, triple_orientation, validate


def test_constructor_rejects_loops_and_parallel_arcs():
    with pytest.raises(ValueError):
        Diagram(2, [(0, 0, 1)])
    with pytest.raises(ValueError):
        Diagram(2, [(0, 1, 1), (1, 0, 1)])
    with pytest.raises(ValueError):
        Diagram(2, [(0, 2, 1)])


def test_adjacency_views():
    d = Diagram(3, [(0, 1, 2), (1, 2, 1)])
    assert d.out[0] == {1: 2}
    assert d.inc[1] == {0: 2}
    assert d.und[1] == {0: 2, 2: 1}
    assert d.weight(2, 1) == 1
    assert d.weight(0, 2) == 0
    assert d.deg(1) == 2


def test_mutation_reverses_incident_arcs():
    d = Diagram(2, [(0, 1, 2)])
    assert d.mutate(0).arcs == ((1, 0, 2),)
    assert d.mutate(1).arcs == ((1, 0, 2),)


def test_mutation_creates_composite_arc():
    # path i -> k -> j gains the arc i -> j
    d = Diagram(3, [(0, 1, 1), (1, 2, 1)])
    m = d.mutate(1)
    assert set(m.arcs) == {(1, 0, 1), (2, 1, 1), (0, 2, 1)}


def test_mutation_cancels_directed_triangle_edge():
    # mutating a vertex of a directed (1,1,1) triangle removes the far edge
    d = Diagram(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    m = d.mutate(1)
    assert set(m.arcs) == {(1, 0, 1), (2, 1, 1)}


def test_mutation_weight_arithmetic_with_weighted_triangle():
    # path 0->1->2 with a=2, b=2, c=1: c' = ab + c - 2*s*sqrt(abc)
    # s = -1 when the closing arc runs 0->2 (weight grows to 9),
    # s = +1 when it runs 2->0 (weight shrinks to 1)
    d = Diagram(3, [(0, 1, 2), (1, 2, 2), (0, 2, 1)])
    assert d.mutate(1).weight(0, 2) == 9
    mm = Diagram(3, [(0, 1, 2), (1, 2, 2), (2, 0, 1)]).mutate(1)
    assert mm.weight(0, 2) == 1


def test_mutation_is_involution_on_samples():
    samples = [
        Diagram(3, [(0, 1, 1), (1, 2, 1)]),
        Diagram(3, [(0, 1, 2), (1, 2, 2), (2, 0, 1)]),
        Diagram(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]),
    ]
    for d in samples:
        for k in range(d.n):
            assert d.mutate(k).mutate(k) == d


def test_validate_flags_non_square_cycle():
    d = Diagram(3, [(0, 1, 2), (1, 2, 1), (2, 0, 1)])
    codes = {v.code for v in validate(d)}
    assert "non-square-cycle" in codes
    good = Diagram(3, [(0, 1, 2), (1, 2, 2), (2, 0, 1)])
    assert validate(good) == []


def test_triple_orientation():
    d = Diagram(3, [(0, 1, 1), (1, 2, 1)])
    assert triple_orientation(d, 0, 1, 2) == "linear"
    d2 = Diagram(3, [(0, 1, 1), (2, 1, 1)])
    assert triple_orientation(d2, 0, 1, 2) == "nonlinear"


def test_cyclic_orientation_checks():
    directed = Diagram(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    acyclic = Diagram(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert directed.is_cyclically_oriented()
    assert not acyclic.is_cyclically_oriented()


def test_induced_and_components():
    d = Diagram(4, [(0, 1, 1), (2, 3, 1)])
    sub, old2new = d.induced([2, 3])
    assert sub.n == 2 and sub.arcs == ((0, 1, 1),)
    assert old2new == {2: 0, 3: 1}
    comps = d.components()
    assert sorted(map(sorted, comps)) == [[0, 1], [2, 3]]
    assert not d.is_connected()
