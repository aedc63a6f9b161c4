"""Canonical keys: relabeling invariance and discrimination."""
import itertools
import random

from diagmut.canon import canonical_form, canonical_key, canonical_key_undirected
from diagmut.diagram import Diagram


def test_key_invariant_under_relabeling():
    d = Diagram(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)])
    key = canonical_key(d)
    for perm in itertools.permutations(range(4)):
        assert canonical_key(d.relabel(list(perm))) == key


def test_key_distinguishes_orientations():
    directed = Diagram(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    acyclic = Diagram(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert canonical_key(directed) != canonical_key(acyclic)
    # forgetting directions they are the same triangle
    assert (canonical_key_undirected(directed)
            == canonical_key_undirected(acyclic))


def test_canonical_form_is_idempotent_and_isomorphic():
    rng = random.Random(5)
    arcs = [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 1), (4, 0, 2), (1, 3, 1)]
    d = Diagram(5, arcs)
    cf = canonical_form(d)
    assert canonical_key(cf) == canonical_key(d)
    assert canonical_form(cf) == cf
    perm = list(range(5))
    rng.shuffle(perm)
    assert canonical_form(d.relabel(perm)) == cf
