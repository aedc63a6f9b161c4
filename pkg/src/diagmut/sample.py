"""Random generation of recognizer-positive diagrams.

Members of the host-based families are sampled by picking a random
connected induced subgraph of a truncated host containing the required
core vertices and then drawing random edge orientations until the result
classifies to the requested mutation type.  This gives independent test
points for the equivalence between family membership and mutation type.
"""
from __future__ import annotations

import random
from typing import Optional

from .diagram import Diagram
from .hosts import build_host
from .recognize import iter_family_matches

# host-based families grouped by the mutation type of their members
TYPE_FAMILIES: dict[str, list[tuple[str, tuple]]] = {
    "A": [("A", ())],
    "B": [("B", ())],
    "D": [("D_square", ()), ("D_slash", ()), ("D_perp", ())]
         + [("D_circle", (n,)) for n in (3, 4, 5, 6)],
    "B1": [("B_square_wedge_B", ()), ("B_slash_wedge_B", ()),
           ("B_slash_wedge_square", ())]
          + [("B_circle_wedge_B", (n,)) for n in (3, 4, 5)],
    "C1": [("C_B_wedge_B", ())],
    "D1": [("D_circle_wedge_square", (n,)) for n in (3, 4, 5)]
          + [("D_circle_wedge_slash", (n,)) for n in (3, 4)]
          + [("D_circle_wedge_revslash", (n,)) for n in (3, 4)]
          + [("D_square_wedge_square", ()), ("D_slash_wedge_slash", ()),
             ("D_boxtimes", ()),
             ("D_vee", ("circle", 3, "circle", 3)),
             ("D_vee", ("circle", 3, "circle", 4)),
             ("D_vee", ("circle", 3, "square", None)),
             ("D_vee", ("circle", 3, "slash", None)),
             ("D_vee", ("circle", 3, "perp", None)),
             ("D_vee", ("square", None, "slash", None)),
             ("D_vee", ("slash", None, "perp", None)),
             ("D_vee", ("perp", None, "perp", None))],
}


def _random_subgraph(host, nverts: int, rng: random.Random) -> Optional[list[str]]:
    """Random connected induced host subgraph containing the required core."""
    chosen = {host.core[r] for r in host.required}
    if not chosen:
        chosen = {rng.choice(host.vertices())}
    if len(chosen) > nverts:
        return None
    # grow with random frontier vertices; connectivity of the core follows
    # because every host core is connected through its own vertices
    while len(chosen) < nverts:
        frontier = sorted({u for v in chosen for u in host.adj[v]
                           if u not in chosen})
        if not frontier:
            break
        chosen.add(rng.choice(frontier))
    # connectivity check over the chosen set
    verts = sorted(chosen)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in host.adj[v]:
            if u in chosen and u not in seen:
                seen.add(u)
                stack.append(u)
    if seen != chosen:
        return None
    return verts


def random_member(dynkin_type: str, nverts: int,
                  rng: random.Random, attempts: int = 200
                  ) -> Optional[Diagram]:
    """One random diagram of ``nverts`` vertices classifying to the type.

    Returns None when no sample was found within the attempt budget (for
    instance when the type has no member of that vertex count).
    """
    for _ in range(attempts):
        kind, params = rng.choice(TYPE_FAMILIES[dynkin_type])
        host = build_host(kind, params, depth=2)
        if len(host.required) > nverts or len(host.adj) < nverts:
            continue
        verts = _random_subgraph(host, nverts, rng)
        if verts is None or len(verts) != nverts:
            continue
        index = {v: i for i, v in enumerate(verts)}
        edges = [(v, u, w) for v in verts for u, w in host.adj[v].items()
                 if u in index and v < u]
        for _ in range(30):
            arcs = []
            for v, u, w in edges:
                t, h = (v, u) if rng.random() < 0.5 else (u, v)
                arcs.append((index[t], index[h], w))
            d = Diagram(len(verts), arcs)
            if next(iter_family_matches(d, kind, params), None) is not None:
                return d
    return None
