"""Mutation of skew-symmetrizable integer matrices.

This is the classical matrix mutation rule.  It serves as an independent
cross-check for diagram mutation: realize a diagram as a skew-symmetrizable
matrix, mutate the matrix, and read the diagram back off.
"""
from __future__ import annotations

import math
from typing import Optional

from .diagram import Diagram


def matrix_mutation(B: list[list[int]], k: int) -> list[list[int]]:
    """Mutate the square integer matrix ``B`` at index ``k``."""
    n = len(B)
    Bp = [row[:] for row in B]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                Bp[i][j] = -B[i][j]
            elif B[i][k] * B[k][j] > 0:
                sign = 1 if B[i][k] > 0 else -1
                Bp[i][j] = B[i][j] + sign * B[i][k] * B[k][j]
    return Bp


def _scaled_square(w: int, shift: int) -> bool:
    """Is ``w * 2**shift`` a perfect-square integer?"""
    if shift < 0:
        if w % (2 ** -shift):
            return False
        v = w // (2 ** -shift)
    else:
        v = w * 2 ** shift
    r = math.isqrt(v)
    return r * r == v


def _allowed_shifts(w: int) -> list[int]:
    """Exponent shifts e_head - e_tail for which both matrix entries are integral."""
    return [s for s in range(-6, 7)
            if _scaled_square(w, s) and _scaled_square(w, -s)]


def realize(d: Diagram) -> Optional[list[list[int]]]:
    """A skew-symmetrizable matrix ``B`` whose diagram is ``d``.

    An arc ``i -> j`` of weight ``w`` becomes entries with ``B[i][j] > 0``
    and ``B[i][j] * (-B[j][i]) = w``.  The symmetrizer is found by searching
    for vertex exponents ``e`` (symmetrizer ``2**e``) consistent with every
    edge; returns None when no power-of-two symmetrizer exists.
    """
    n = d.n
    shifts = {(t, h): _allowed_shifts(w) for t, h, w in d.arcs}
    expo: dict[int, int] = {}

    edges_at: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(n)}
    for t, h, w in d.arcs:
        edges_at[t].append((t, h, w))
        edges_at[h].append((t, h, w))

    def assign(order: list[int], pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        choices = {0}
        fixed = None
        for t, h, w in edges_at[v]:
            o = h if v == t else t
            if o in expo:
                opts = set()
                for s in shifts[(t, h)]:
                    # s is e_h - e_t
                    opts.add(expo[o] + s if v == h else expo[o] - s)
                choices = opts if fixed is None else (choices & opts)
                fixed = True
        if fixed is None:
            choices = {0}
        for c in sorted(choices):
            expo[v] = c
            if assign(order, pos + 1):
                return True
            del expo[v]
        return False

    # BFS ordering per component so each new vertex touches assigned ones
    order: list[int] = []
    seen: set[int] = set()
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in d.und[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    if not assign(order, 0):
        return None

    B = [[0] * n for _ in range(n)]
    for t, h, w in d.arcs:
        sh = expo[h] - expo[t]
        if sh >= 0:
            num = w * 2 ** sh
        else:
            num = w // 2 ** -sh
        b = math.isqrt(num)
        c = w // b
        B[t][h] = b
        B[h][t] = -c
    return B


def diagram_of_matrix(B: list[list[int]]) -> Diagram:
    """Read the diagram off a skew-symmetrizable matrix."""
    n = len(B)
    arcs = []
    for i in range(n):
        for j in range(n):
            if B[i][j] > 0:
                arcs.append((i, j, B[i][j] * (-B[j][i])))
    return Diagram(n, arcs)


def is_skew_symmetrizable(B: list[list[int]]) -> bool:
    """Check existence of a positive rational symmetrizer (small sizes)."""
    n = len(B)
    from fractions import Fraction
    dvec: list[Optional[Fraction]] = [None] * n
    for s in range(n):
        if dvec[s] is not None:
            continue
        dvec[s] = Fraction(1)
        queue = [s]
        while queue:
            v = queue.pop(0)
            for u in range(n):
                if B[v][u] == 0 and B[u][v] == 0:
                    continue
                if (B[v][u] == 0) != (B[u][v] == 0):
                    return False
                if B[v][u] * B[u][v] > 0:
                    return False
                if B[v][u] == 0:
                    continue
                need = dvec[v] * Fraction(abs(B[v][u]), abs(B[u][v]))
                if dvec[u] is None:
                    dvec[u] = need
                    queue.append(u)
                elif dvec[u] != need:
                    return False
    return True
