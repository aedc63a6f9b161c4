"""Verification suites: closure, cycle shrinking, enumeration oracle."""
import pytest

from diagmut.diagram import Diagram
from diagmut.orbit import enumerate_class
from diagmut.seeds import dynkin_seed
from diagmut.verify import (check_closure, check_shrink_cycle,
                            classify_by_enumeration, run_classification_check,
                            shrink_cycle)


def test_check_closure_passes_on_small_affine_classes():
    for t, r in (("C1", 2), ("B1", 3), ("D1", 4)):
        cs = enumerate_class(dynkin_seed(t, r))
        assert cs.exhausted
        rep = check_closure(cs.members.values(), suite=f"{t}{r}")
        assert rep.passed, rep.failures[:3]
        assert rep.mutations == sum(d.n for d in cs.members.values())


def test_check_closure_reports_failures_for_foreign_diagrams():
    # a diagram outside every family has no applicable rules
    bad = Diagram(3, [(0, 1, 4), (1, 2, 4), (2, 0, 4)])
    rep = check_closure([bad])
    assert not rep.passed


def test_shrink_cycle_minimal_attachment():
    att = Diagram(1, [])
    d, seq = shrink_cycle(3, att, 0)
    assert d.n == 4 and len(seq) == 1
    assert check_shrink_cycle(3, att, 0) == []


def test_shrink_cycle_postconditions_medium():
    att = Diagram(2, [(0, 1, 1)])
    for n in (4, 5, 6):
        assert check_shrink_cycle(n, att, 1) == []


def test_shrink_cycle_rejects_bad_input():
    with pytest.raises(ValueError):
        shrink_cycle(2, Diagram(1, []), 0)


def test_classify_by_enumeration_examples():
    four_cycle = Diagram(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert classify_by_enumeration(four_cycle) == "D"
    edge = Diagram(2, [(0, 1, 1)])
    assert classify_by_enumeration(edge) == "A"
    heavy = Diagram(3, [(0, 1, 4), (1, 2, 4), (2, 0, 4)])
    assert classify_by_enumeration(heavy) == "Unknown"
    # the weight-4 triangle reproduces itself under mutation
    assert enumerate_class(heavy).size == 1
    assert classify_by_enumeration(four_cycle, max_members=2) is None


def test_classify_by_enumeration_stable_under_mutation():
    d = dynkin_seed("B", 3)
    assert classify_by_enumeration(d) == "B"
    assert classify_by_enumeration(d.mutate(1)) == "B"


def test_run_classification_check_small():
    rep = run_classification_check("A", 3)
    assert rep.passed and rep.diagrams == 4
    rep = run_classification_check("D1", 4)
    assert rep.passed and rep.diagrams == 10
