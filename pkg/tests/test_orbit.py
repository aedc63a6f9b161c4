"""Class enumeration and the equivalence oracle."""
import random

from diagmut.canon import canonical_key
from diagmut.diagram import Diagram
from diagmut.orbit import are_mutation_equivalent, enumerate_class
from diagmut.seeds import dynkin_seed


def test_a3_class_has_four_members():
    cs = enumerate_class(dynkin_seed("A", 3))
    assert cs.exhausted and cs.size == 4


def test_enumeration_independent_of_seed_member_and_labels():
    seed = dynkin_seed("D", 4)
    cs = enumerate_class(seed)
    keys = set(cs.members)
    rng = random.Random(11)
    # start from another member, randomly relabeled
    other = rng.choice(list(cs.members.values()))
    perm = list(range(other.n))
    rng.shuffle(perm)
    cs2 = enumerate_class(other.relabel(perm))
    assert cs2.exhausted and set(cs2.members) == keys


def test_limits_reported_as_not_exhausted():
    cs = enumerate_class(dynkin_seed("A", 5), max_members=3)
    assert not cs.exhausted and cs.size == 3


def test_are_mutation_equivalent():
    a4 = dynkin_seed("A", 4)
    assert are_mutation_equivalent(a4, a4.mutate(1).mutate(2)) is True
    assert are_mutation_equivalent(a4, dynkin_seed("D", 4)) is False


def test_members_are_closed_under_mutation():
    cs = enumerate_class(dynkin_seed("B", 3))
    assert cs.exhausted
    for d in cs.members.values():
        for k in range(d.n):
            assert canonical_key(d.mutate(k)) in cs.members
