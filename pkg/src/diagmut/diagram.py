"""Weighted directed diagrams and their mutation.

A diagram is a finite directed graph with positive integer edge weights,
at most one edge between any pair of vertices and no loops.  The diagrams
of interest additionally satisfy a cycle condition: the product of weights
along every (simple, undirected) cycle is a perfect square.  Mutation at a
vertex is an involution on such diagrams and all arithmetic here is exact
integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class MutationDomainError(Exception):
    """Raised when a mutation step would require a non-integer weight.

    This only happens when mutating a diagram that violates the cycle
    condition; mutation of a valid diagram always stays exact.
    """


@dataclass(frozen=True)
class Violation:
    """A single validation failure with a short machine-readable code."""

    code: str
    message: str
    witness: tuple = ()


class Diagram:
    """An immutable weighted directed graph on vertices ``0..n-1``.

    Arcs are stored as ``(tail, head, weight)`` triples.  At most one arc
    may join an unordered pair of vertices; loops are rejected outright.
    Non-positive weights are representable (so that :func:`validate` can
    report them) but never produced by mutation.
    """

    __slots__ = ("n", "arcs", "labels", "_out", "_in", "_und", "_hash", "_chordless")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int, int]],
                 labels: Optional[Sequence[str]] = None):
        arcs = tuple(sorted((int(t), int(h), int(w)) for (t, h, w) in arcs))
        seen = set()
        for t, h, w in arcs:
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(f"arc ({t},{h}) out of range for n={n}")
            if t == h:
                raise ValueError(f"loop at vertex {t}")
            pair = (t, h) if t < h else (h, t)
            if pair in seen:
                raise ValueError(f"multiple arcs between {pair[0]} and {pair[1]}")
            seen.add(pair)
        self.n = n
        self.arcs = arcs
        if labels is None:
            self.labels = tuple(str(i) for i in range(n))
        else:
            if len(labels) != n:
                raise ValueError("labels length mismatch")
            self.labels = tuple(str(x) for x in labels)
        self._out = None
        self._in = None
        self._und = None
        self._hash = None
        self._chordless = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, int, int]],
                  n: Optional[int] = None) -> "Diagram":
        arcs = list(arcs)
        if n is None:
            n = 1 + max((max(t, h) for t, h, _ in arcs), default=-1)
        return cls(n, arcs)

    def with_labels(self, labels: Sequence[str]) -> "Diagram":
        return Diagram(self.n, self.arcs, labels)

    # -- basic views ----------------------------------------------------------

    @property
    def out(self) -> dict[int, dict[int, int]]:
        """Map ``tail -> {head: weight}``."""
        if self._out is None:
            o: dict[int, dict[int, int]] = {v: {} for v in range(self.n)}
            for t, h, w in self.arcs:
                o[t][h] = w
            self._out = o
        return self._out

    @property
    def inc(self) -> dict[int, dict[int, int]]:
        """Map ``head -> {tail: weight}``."""
        if self._in is None:
            i: dict[int, dict[int, int]] = {v: {} for v in range(self.n)}
            for t, h, w in self.arcs:
                i[h][t] = w
            self._in = i
        return self._in

    @property
    def und(self) -> dict[int, dict[int, int]]:
        """Undirected adjacency map ``v -> {u: weight}``."""
        if self._und is None:
            u: dict[int, dict[int, int]] = {v: {} for v in range(self.n)}
            for t, h, w in self.arcs:
                u[t][h] = w
                u[h][t] = w
            self._und = u
        return self._und

    def weight(self, u: int, v: int) -> int:
        """Weight of the edge between u and v, 0 if absent."""
        return self.und[u].get(v, 0)

    def arc_between(self, u: int, v: int) -> Optional[tuple[int, int, int]]:
        w = self.out[u].get(v)
        if w is not None:
            return (u, v, w)
        w = self.out[v].get(u)
        if w is not None:
            return (v, u, w)
        return None

    def deg(self, v: int) -> int:
        return len(self.und[v])

    def deg_out(self, v: int) -> int:
        return len(self.out[v])

    def deg_in(self, v: int) -> int:
        return len(self.inc[v])

    # -- equality / hashing ---------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Diagram) and self.n == other.n
                and self.arcs == other.arcs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.arcs))
        return self._hash

    def __repr__(self):
        return f"Diagram(n={self.n}, arcs={list(self.arcs)})"

    # -- graph operations -----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Diagram":
        """Apply vertex permutation ``perm`` (old index -> new index)."""
        arcs = [(perm[t], perm[h], w) for t, h, w in self.arcs]
        labels = [""] * self.n
        for old, new in enumerate(perm):
            labels[new] = self.labels[old]
        return Diagram(self.n, arcs, labels)

    def induced(self, vertices: Iterable[int]) -> tuple["Diagram", dict[int, int]]:
        """Full sub-diagram on ``vertices``; also returns old->new index map."""
        vs = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(vs)}
        arcs = [(idx[t], idx[h], w) for t, h, w in self.arcs
                if t in idx and h in idx]
        return Diagram(len(vs), arcs, [self.labels[v] for v in vs]), idx

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.und[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def components(self, exclude: frozenset[int] = frozenset()) -> list[frozenset[int]]:
        """Connected components of the diagram minus ``exclude``."""
        seen: set[int] = set(exclude)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                for u in self.und[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        stack.append(u)
            comps.append(frozenset(comp))
        return comps

    def articulation_vertices(self) -> list[int]:
        """Vertices whose removal disconnects the diagram (n small, so O(n*m))."""
        if self.n <= 2:
            return []
        base = len(self.components())
        out = []
        for v in range(self.n):
            if len(self.components(exclude=frozenset([v]))) > base:
                out.append(v)
        return out

    # -- mutation -------------------------------------------------------------

    def mutate(self, k: int) -> "Diagram":
        """Mutate at vertex ``k`` and return the new diagram.

        Edges at ``k`` reverse with weights kept.  For each length-two
        directed path ``i -> k -> j`` with weights ``a``, ``b`` and current
        weight ``c`` between ``i`` and ``j`` (0 if absent), the new weight is

            c' = a*b + c - 2*s*sqrt(a*b*c)

        with ``s = +1`` when ``(i, j, k)`` is an oriented triangle and
        ``s = -1`` otherwise.  The square root must be exact.
        """
        if not (0 <= k < self.n):
            raise ValueError(f"vertex {k} out of range")
        pairs: dict[tuple[int, int], tuple[int, int, int]] = {}
        # pairs maps unordered (min,max) -> (tail, head, weight)
        for t, h, w in self.arcs:
            key = (t, h) if t < h else (h, t)
            if t == k or h == k:
                pairs[key] = (h, t, w)  # reverse at k
            else:
                pairs[key] = (t, h, w)
        ins = self.inc[k]    # i -> a  for arcs i -> k
        outs = self.out[k]   # j -> b  for arcs k -> j
        for i, a in ins.items():
            for j, b in outs.items():
                if i == j:
                    continue
                key = (i, j) if i < j else (j, i)
                cur = self.arc_between(i, j)
                if cur is None:
                    c, s = 0, -1
                elif cur[0] == j:  # arc j -> i closes the oriented triangle
                    c, s = cur[2], 1
                else:
                    c, s = cur[2], -1
                prod = a * b * c
                r = math.isqrt(prod)
                if r * r != prod:
                    raise MutationDomainError(
                        f"non-square product {prod} on path {i}->{k}->{j}")
                c_new = a * b + c - 2 * s * r
                if s == -1:
                    pairs[key] = (i, j, c_new)
                else:
                    if a * b > c:
                        pairs[key] = (i, j, c_new)
                    elif a * b < c:
                        pairs[key] = (j, i, c_new)
                    else:
                        pairs.pop(key, None)
        arcs = [v for v in pairs.values() if v[2] != 0]
        return Diagram(self.n, arcs, self.labels)

    def mutate_seq(self, ks: Iterable[int]) -> "Diagram":
        d = self
        for k in ks:
            d = d.mutate(k)
        return d

    # -- cycles ---------------------------------------------------------------

    def simple_cycles(self, cap: Optional[int] = None) -> tuple[list[tuple[int, ...]], bool]:
        """All simple undirected cycles, as vertex tuples.

        Each cycle is listed once, rooted at its smallest vertex.  Returns
        ``(cycles, complete)`` where ``complete`` is False when ``cap`` was
        hit and enumeration stopped early.
        """
        cycles: list[tuple[int, ...]] = []
        adj = self.und
        for root in range(self.n):
            stack: list[tuple[int, tuple[int, ...]]] = [(root, (root,))]
            while stack:
                v, path = stack.pop()
                for u in adj[v]:
                    if u == root and len(path) >= 3:
                        if path[1] < path[-1]:  # one orientation only
                            cycles.append(path)
                            if cap is not None and len(cycles) >= cap:
                                return cycles, False
                    elif u > root and u not in path:
                        stack.append((u, path + (u,)))
        return cycles, True

    def chordless_cycles(self, exclude_edge: Optional[tuple[int, int]] = None
                         ) -> list[frozenset[int]]:
        """Vertex sets whose full subgraph is a single (undirected) cycle.

        ``exclude_edge`` drops one edge (by unordered endpoints) from the
        graph before looking for such sets.
        """
        if exclude_edge is None and self._chordless is not None:
            return self._chordless
        adj = {v: set(self.und[v]) for v in range(self.n)}
        if exclude_edge is not None:
            u, v = exclude_edge
            adj[u].discard(v)
            adj[v].discard(u)
        out = []
        n = self.n
        # grow induced paths root..v with all interior vertices > root and
        # no chords; close into a cycle when v is adjacent to the root only.
        for root in range(n):
            nbrs_root = sorted(x for x in adj[root] if x > root)
            for second in nbrs_root:
                stack = [(second, (root, second))]
                while stack:
                    v, path = stack.pop()
                    for u in adj[v]:
                        if u == root:
                            if len(path) >= 3 and path[1] < path[-1]:
                                # chordless: root adjacent only to ends
                                if sum(1 for p in path[1:] if p in adj[root]) == 2:
                                    out.append(frozenset(path))
                            continue
                        if u <= root or u in path:
                            continue
                        # u must not be adjacent to any interior path vertex
                        # (adjacency to the root is fine: it closes the cycle
                        # later, and the closure test rejects genuine chords)
                        if any(p in adj[u] for p in path[1:-1]):
                            continue
                        stack.append((u, path + (u,)))
        # dedupe (a cycle can be found from both neighbours of the root)
        seen: set[frozenset[int]] = set()
        uniq = []
        for c in out:
            if c not in seen:
                seen.add(c)
                uniq.append(c)
        if exclude_edge is None:
            self._chordless = uniq
        return uniq

    def cycle_is_directed(self, cycle: Iterable[int],
                          exclude_edge: Optional[tuple[int, int]] = None) -> bool:
        """True if the full subgraph on ``cycle`` is a directed cycle.

        ``exclude_edge`` ignores one edge (by unordered endpoints), for
        checking cycles of an edge-deleted graph.
        """
        cyc = set(cycle)
        skip = frozenset(exclude_edge) if exclude_edge is not None else None
        for v in cyc:
            outs = sum(1 for u in self.out[v]
                       if u in cyc and frozenset((u, v)) != skip)
            ins = sum(1 for u in self.inc[v]
                      if u in cyc and frozenset((u, v)) != skip)
            if outs != 1 or ins != 1:
                return False
        return True

    def is_cyclically_oriented(self, exclude_edge: Optional[tuple[int, int]] = None) -> bool:
        """True when every chordless cycle is a directed cycle.

        With ``exclude_edge``, the check applies to the graph with that edge
        deleted: its own chordless cycles, with the edge ignored even when
        both endpoints happen to lie on one.
        """
        return all(self.cycle_is_directed(cyc, exclude_edge)
                   for cyc in self.chordless_cycles(exclude_edge))

    def is_simply_laced(self) -> bool:
        return all(w == 1 for _, _, w in self.arcs)


DEFAULT_CYCLE_CAP = 100_000


def validate(d: Diagram, cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Violation]:
    """Check diagram axioms; returns an empty list when the diagram is valid.

    Loop/parallel-edge violations cannot occur in a :class:`Diagram`
    instance (the constructor rejects them), so the checks here are weight
    positivity and the perfect-square condition on every simple cycle.
    When the number of simple cycles exceeds ``cycle_cap`` a
    ``cycle-check-incomplete`` violation is reported instead of silently
    passing.
    """
    out: list[Violation] = []
    for t, h, w in d.arcs:
        if w <= 0:
            out.append(Violation("nonpositive-weight",
                                 f"edge {t}->{h} has weight {w}", (t, h, w)))
    cycles, complete = d.simple_cycles(cap=cycle_cap)
    for cyc in cycles:
        prod = 1
        for i, v in enumerate(cyc):
            prod *= d.weight(v, cyc[(i + 1) % len(cyc)])
        if prod >= 0 and math.isqrt(abs(prod)) ** 2 != prod:
            out.append(Violation("non-square-cycle",
                                 f"cycle {cyc} has weight product {prod}", cyc))
    if not complete:
        out.append(Violation("cycle-check-incomplete",
                             f"more than {cycle_cap} simple cycles; "
                             "validation incomplete", ()))
    return out


def triple_orientation(d: Diagram, a: int, mid: int, b: int) -> str:
    """Orientation of an induced path ``a - mid - b``.

    Returns ``"linear"`` when both arrows point the same way along the path
    (``a -> mid -> b`` or ``b -> mid -> a``) and ``"nonlinear"`` otherwise.
    """
    if d.weight(a, mid) == 0 or d.weight(mid, b) == 0:
        raise ValueError("not a path through mid")
    fwd = (mid in d.out[a]) and (b in d.out[mid])
    bwd = (mid in d.out[b]) and (a in d.out[mid])
    return "linear" if (fwd or bwd) else "nonlinear"
