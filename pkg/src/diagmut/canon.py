"""Canonical forms for diagrams up to weighted digraph isomorphism.

The canonical key is computed by iterated colour refinement plus an
individualization/refinement backtrack that takes the lexicographically
least relabelled encoding.  Refinement alone does not separate all
vertices (a directed cycle is vertex-transitive), so the backtrack is
required for correctness; the instances handled here are small, which
keeps it cheap.
"""
from __future__ import annotations

import struct
from typing import Optional

from .diagram import Diagram


class SizeLimitExceeded(Exception):
    """Raised when a diagram is too large for canonicalization."""


DEFAULT_MAX_VERTICES = 20


def _neighbour_lists(d: Diagram, directed: bool) -> list[list[tuple[int, int]]]:
    """Per-vertex list of (signed-or-absolute weight, neighbour)."""
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(d.n)]
    for t, h, w in d.arcs:
        if directed:
            nbrs[t].append((w, h))
            nbrs[h].append((-w, t))
        else:
            nbrs[t].append((w, h))
            nbrs[h].append((w, t))
    return nbrs


def _refine(n: int, nbrs: list[list[tuple[int, int]]], colors: list[int]) -> list[int]:
    """Stable colour refinement; colours are dense ints ordered canonically."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            sig = sorted((sw, colors[u]) for sw, u in nbrs[v])
            sigs.append((colors[v], tuple(sig)))
        order = sorted(set(sigs))
        lookup = {s: i for i, s in enumerate(order)}
        colors = [lookup[s] for s in sigs]
        if len(order) == ncolors:
            return colors
        ncolors = len(order)


def _encode(d: Diagram, perm: list[int], directed: bool) -> tuple:
    """Upper-triangle encoding of the relabelled diagram (old->new perm)."""
    n = d.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    out = []
    for i in range(n):
        vi = inv[i]
        for j in range(i + 1, n):
            vj = inv[j]
            w = d.out[vi].get(vj)
            if w is not None:
                out.append(w)
            else:
                w = d.out[vj].get(vi)
                out.append(-w if w is not None else 0)
    if not directed:
        out = [abs(x) for x in out]
    return tuple(out)


def _canonical_encoding(d: Diagram, directed: bool) -> tuple:
    n = d.n
    if n == 0:
        return ()
    nbrs = _neighbour_lists(d, directed)
    best: Optional[tuple] = None

    def search(colors: list[int]):
        nonlocal best
        colors = _refine(n, nbrs, colors)
        # cells grouped by colour
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            enc = _encode(d, colors, directed)
            if best is None or enc < best:
                best = enc
            return
        pivot = len(set(colors))
        for v in target:
            nxt = colors[:]
            nxt[v] = pivot
            search(nxt)

    search([0] * n)
    assert best is not None
    return best


def canonical_key(d: Diagram, max_vertices: int = DEFAULT_MAX_VERTICES) -> bytes:
    """Canonical byte string; equal iff diagrams are isomorphic."""
    if d.n > max_vertices:
        raise SizeLimitExceeded(f"{d.n} vertices exceeds limit {max_vertices}")
    enc = _canonical_encoding(d, directed=True)
    return struct.pack(f">H{len(enc)}h", d.n, *enc)


def canonical_key_undirected(d: Diagram, max_vertices: int = DEFAULT_MAX_VERTICES) -> bytes:
    """Canonical key of the underlying weighted undirected graph."""
    if d.n > max_vertices:
        raise SizeLimitExceeded(f"{d.n} vertices exceeds limit {max_vertices}")
    enc = _canonical_encoding(d, directed=False)
    return struct.pack(f">H{len(enc)}h", d.n, *enc)


def canonical_form(d: Diagram, max_vertices: int = DEFAULT_MAX_VERTICES) -> Diagram:
    """A canonically relabelled copy (same key for all isomorphic inputs)."""
    if d.n > max_vertices:
        raise SizeLimitExceeded(f"{d.n} vertices exceeds limit {max_vertices}")
    n = d.n
    if n == 0:
        return d
    enc = _canonical_encoding(d, directed=True)
    arcs = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            w = enc[idx]
            idx += 1
            if w > 0:
                arcs.append((i, j, w))
            elif w < 0:
                arcs.append((j, i, -w))
    return Diagram(n, arcs)
