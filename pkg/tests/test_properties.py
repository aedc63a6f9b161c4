"""Property-based tests over randomly drawn class members."""
import functools

from hypothesis import given, settings, strategies as st

from diagmut import io
from diagmut.canon import canonical_key
from diagmut.diagram import validate
from diagmut.matrix_oracle import diagram_of_matrix, matrix_mutation, realize
from diagmut.orbit import enumerate_class
from diagmut.seeds import dynkin_seed

_SEEDS = [("A", 4), ("A", 6), ("B", 3), ("B", 5), ("D", 4), ("D", 5),
          ("B1", 3), ("C1", 3), ("D1", 4)]


@functools.lru_cache(maxsize=None)
def _members(t, rank):
    return list(enumerate_class(dynkin_seed(t, rank)).members.values())


@st.composite
def class_member(draw):
    t, rank = draw(st.sampled_from(_SEEDS))
    return draw(st.sampled_from(_members(t, rank)))


@st.composite
def member_and_vertex(draw):
    d = draw(class_member())
    return d, draw(st.integers(min_value=0, max_value=d.n - 1))


@settings(max_examples=200, deadline=None)
@given(member_and_vertex())
def test_mutation_is_involution(dk):
    d, k = dk
    assert d.mutate(k).mutate(k) == d


@settings(max_examples=200, deadline=None)
@given(member_and_vertex())
def test_mutation_preserves_validity(dk):
    d, k = dk
    assert validate(d.mutate(k)) == []


@settings(max_examples=200, deadline=None)
@given(member_and_vertex())
def test_matrix_oracle_agrees(dk):
    d, k = dk
    B = realize(d)
    assert B is not None
    assert canonical_key(diagram_of_matrix(matrix_mutation(B, k))) \
        == canonical_key(d.mutate(k))


@settings(max_examples=100, deadline=None)
@given(class_member())
def test_serialization_round_trip(d):
    assert canonical_key(io.parse(io.serialize(d))) == canonical_key(d)


@settings(max_examples=50, deadline=None)
@given(member_and_vertex(), st.randoms(use_true_random=False))
def test_enumeration_is_member_independent(dk, rnd):
    d, k = dk
    keys = set(enumerate_class(d).members)
    assert canonical_key(d.mutate(k)) in keys
    assert set(enumerate_class(d.mutate(k)).members) == keys
