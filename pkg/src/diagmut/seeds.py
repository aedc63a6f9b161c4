"""Standard seed diagrams for the Dynkin and affine Dynkin shapes."""
from __future__ import annotations

from .diagram import Diagram

TYPES = ("A", "B", "D", "B1", "C1", "D1")

MIN_RANK = {"A": 1, "B": 2, "D": 4, "B1": 3, "C1": 2, "D1": 4}


def dynkin_seed(dynkin_type: str, rank: int) -> Diagram:
    """The reference orientation of the given (affine) Dynkin shape.

    Finite types have ``rank`` vertices, affine types ``rank + 1``.  Edges
    point from the lower index to the higher; the weighted edge of type B
    sits at the start of the path, those of type C(1) at both ends.
    """
    if dynkin_type not in TYPES:
        raise ValueError(f"unknown type {dynkin_type!r}")
    if rank < MIN_RANK[dynkin_type]:
        raise ValueError(f"rank {rank} too small for type {dynkin_type}")
    n = rank
    if dynkin_type == "A":
        return Diagram(n, [(i, i + 1, 1) for i in range(n - 1)])
    if dynkin_type == "B":
        arcs = [(0, 1, 2)] + [(i, i + 1, 1) for i in range(1, n - 1)]
        return Diagram(n, arcs)
    if dynkin_type == "D":
        arcs = [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
        return Diagram(n, arcs)
    if dynkin_type == "B1":
        # rank n, n + 1 vertices: fork at one end, weight-2 edge at the other
        m = n + 1
        arcs = [(0, 2, 1), (1, 2, 1)]
        arcs += [(i, i + 1, 1) for i in range(2, m - 2)]
        arcs += [(m - 2, m - 1, 2)]
        return Diagram(m, arcs)
    if dynkin_type == "C1":
        m = n + 1
        arcs = [(0, 1, 2)] + [(i, i + 1, 1) for i in range(1, m - 2)] + \
               [(m - 2, m - 1, 2)]
        return Diagram(m, arcs)
    # D1: forks at both ends
    m = n + 1
    arcs = [(0, 2, 1), (1, 2, 1)]
    arcs += [(i, i + 1, 1) for i in range(2, m - 3)]
    arcs += [(m - 3, m - 2, 1), (m - 3, m - 1, 1)]
    return Diagram(m, arcs)
