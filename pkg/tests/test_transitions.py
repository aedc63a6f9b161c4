"""Transition rule table: structure and spot-checked targets."""
import pytest

from diagmut.diagram import Diagram
from diagmut.recognize import FamilyId
from diagmut.seeds import dynkin_seed
from diagmut.transitions import RULES, UncoveredCase, transition_targets


def test_rule_ids_unique_and_well_formed():
    ids = [r.rule_id for r in RULES]
    assert len(ids) == len(set(ids))
    for r in RULES:
        assert isinstance(r.source, str) and isinstance(r.role, str)
        assert isinstance(r.targets, tuple) and r.targets


def test_circle_star_grows_at_attachment_vertex():
    # 5-vertex member of the triangle-with-attachments family: mutating an
    # attachment vertex joined to two consecutive ring vertices grows the ring
    d = Diagram(5, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (1, 3, 1),
                    (3, 0, 1), (3, 4, 1)])
    patterns, used = transition_targets(d, 3)
    grown = FamilyId("D_circle", n=4)
    assert any(p.accepts(grown, None) for p in patterns)


def test_wedge_dot_collapses_to_width_zero_comma():
    d = dynkin_seed("C1", 2).mutate(1)  # 3-vertex wedge member
    # its middle vertex is the shared one; mutating it returns to the seed
    patterns, used = transition_targets(d, 1)
    fid = FamilyId("C_comma")
    assert any(p.accepts(fid, 0) for p in patterns)


def test_unmatched_source_raises_uncovered():
    bad = Diagram(3, [(0, 1, 4), (1, 2, 4), (2, 0, 4)])
    with pytest.raises(UncoveredCase):
        transition_targets(bad, 0)
