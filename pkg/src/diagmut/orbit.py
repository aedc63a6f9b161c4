"""Breadth-first enumeration of mutation classes up to isomorphism."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .canon import canonical_key
from .diagram import Diagram

DEFAULT_MAX_MEMBERS = 10 ** 6
DEFAULT_MAX_STEPS = 10 ** 7


@dataclass
class ClassSet:
    """Result of enumerating a mutation class.

    ``members`` maps canonical key -> a representative diagram.  When a
    limit was hit, ``exhausted`` is False and the set is the part reached
    so far.
    """

    seed: Diagram
    members: dict[bytes, Diagram]
    exhausted: bool
    steps: int
    depth: int

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, key: bytes) -> bool:
        return key in self.members


def enumerate_class(seed: Diagram,
                    max_members: int = DEFAULT_MAX_MEMBERS,
                    max_steps: int = DEFAULT_MAX_STEPS) -> ClassSet:
    """All diagrams mutation-equivalent to ``seed``, up to isomorphism.

    The BFS frontier is processed in canonical-key order, which makes the
    visit order (and hence the reported ``depth``) independent of how the
    seed was labelled.
    """
    k0 = canonical_key(seed)
    members: dict[bytes, Diagram] = {k0: seed}
    frontier: list[tuple[bytes, Diagram]] = [(k0, seed)]
    steps = 0
    depth = 0
    exhausted = True
    while frontier:
        frontier.sort(key=lambda kv: kv[0])
        nxt: list[tuple[bytes, Diagram]] = []
        grew = False
        for _, d in frontier:
            for k in range(d.n):
                if steps >= max_steps:
                    return ClassSet(seed, members, False, steps, depth)
                steps += 1
                m = d.mutate(k)
                key = canonical_key(m)
                if key not in members:
                    if len(members) >= max_members:
                        return ClassSet(seed, members, False, steps, depth)
                    members[key] = m
                    nxt.append((key, m))
                    grew = True
        if grew:
            depth += 1
        frontier = nxt
    return ClassSet(seed, members, exhausted, steps, depth)


def are_mutation_equivalent(d1: Diagram, d2: Diagram,
                            max_members: int = DEFAULT_MAX_MEMBERS,
                            max_steps: int = DEFAULT_MAX_STEPS) -> Optional[bool]:
    """True / False when decidable within the limits, else None.

    Enumerates the class of ``d1``; if that is exhausted the answer is
    exact.  Otherwise a positive hit is still conclusive, and None means
    the search gave out before finding ``d2``.
    """
    if d1.n != d2.n:
        return False
    key2 = canonical_key(d2)
    cs = enumerate_class(d1, max_members=max_members, max_steps=max_steps)
    if key2 in cs.members:
        return True
    return False if cs.exhausted else None
