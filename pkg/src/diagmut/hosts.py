"""Host graphs for the diagram families.

Each mutation-class family is described by an (in principle infinite)
undirected weighted host graph; the family's diagrams are exactly the
orientations of finite full connected subgraphs of the host that contain
the host's core and satisfy the family's orientation conditions.  Hosts
are built here as finite truncations: every vertex within a prescribed
distance of the core is present.

The recurring building block is an infinite binary tree in which each
pair of siblings is joined by an edge; ``grow`` below attaches a
truncation of it under a root vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional


@dataclass(frozen=True)
class HostGraph:
    """A finite truncation of a family's host graph.

    ``adj`` is the undirected weighted adjacency; ``core`` maps role names
    (``a1``, ``x2``, ``dot`` ...) to host vertices.  ``required`` lists the
    roles whose vertices every family member must contain.  Roles outside
    ``required`` (for instance the cycle-attachment vertices ``x_i`` of the
    circle families) name optional structure that recognizers and mutation
    rules refer to.
    """

    family: str
    params: tuple
    depth: int
    adj: dict[str, dict[str, int]]
    core: dict[str, str]
    required: frozenset[str]

    def vertices(self) -> list[str]:
        return list(self.adj)

    def role_of(self, vertex: str) -> Optional[str]:
        for role, v in self.core.items():
            if v == vertex:
                return role
        return None


class UnsupportedFamily(Exception):
    """Raised for families that have no single host graph (glued families)."""


class _Builder:
    def __init__(self):
        self.adj: dict[str, dict[str, int]] = {}

    def vertex(self, v: str):
        self.adj.setdefault(v, {})

    def edge(self, u: str, v: str, w: int = 1):
        self.vertex(u)
        self.vertex(v)
        self.adj[u][v] = w
        self.adj[v][u] = w

    def grow(self, root: str, depth: int, root_edge_weight: int = 1):
        """Attach ``depth`` levels of the sibling-joined binary tree under root."""
        self.vertex(root)
        if depth <= 0:
            return
        c0, c1 = root + ".0", root + ".1"
        self.edge(root, c0, root_edge_weight)
        self.edge(root, c1, root_edge_weight)
        self.edge(c0, c1, 1)
        self.grow(c0, depth - 1)
        self.grow(c1, depth - 1)


def _host(family, params, depth, b: _Builder, core: dict[str, str],
          required: Iterable[str]) -> HostGraph:
    return HostGraph(family, tuple(params), depth,
                     {v: dict(nb) for v, nb in b.adj.items()},
                     dict(core), frozenset(required))


@lru_cache(maxsize=None)
def build_host(family: str, params: tuple = (), depth: int = 3) -> HostGraph:
    """Build the truncated host for ``family`` with the given parameters.

    ``depth`` bounds the distance from the core (for family ``A``, from the
    base vertex) up to which host vertices are generated.  Glued families
    (the comma families) have no host and raise :class:`UnsupportedFamily`.
    """
    b = _Builder()
    if family == "A":
        # two sibling-joined binary trees sharing their root
        b.vertex("x")
        for side in ("L", "R"):
            c0, c1 = side + "0", side + "1"
            b.edge("x", c0)
            b.edge("x", c1)
            b.edge(c0, c1)
            b.grow(c0, depth - 1)
            b.grow(c1, depth - 1)
        return _host(family, params, depth, b, {"x": "x"}, [])

    if family == "B":
        # the tree of family A's halves with weight-2 edges at the base
        b.grow("x", depth, root_edge_weight=2)
        return _host(family, params, depth, b, {"x": "x"}, ["x"])

    if family == "D_circle":
        (n,) = params
        core = {}
        for i in range(1, n + 1):
            j = i % n + 1
            b.edge(f"a{i}", f"a{j}")
            core[f"a{i}"] = f"a{i}"
        for i in range(1, n + 1):
            j = i % n + 1
            xi = f"x{i}"
            b.edge(xi, f"a{i}")
            b.edge(xi, f"a{j}")
            b.grow(xi, depth - 1)
            core[xi] = xi
        return _host(family, params, depth, b, core, [f"a{i}" for i in range(1, n + 1)])

    if family in ("D_square", "D_slash"):
        for xi in ("x1", "x2"):
            b.edge(xi, "a1")
            b.edge(xi, "a2")
            b.grow(xi, depth - 1)
        if family == "D_slash":
            b.edge("x1", "x2")
        core = {v: v for v in ("x1", "x2", "a1", "a2")}
        return _host(family, params, depth, b, core, list(core))

    if family == "D_perp":
        b.edge("x1", "a1")
        b.edge("x1", "a2")
        b.grow("x1", depth)
        core = {v: v for v in ("x1", "a1", "a2")}
        return _host(family, params, depth, b, core, list(core))

    if family in ("B_square_wedge_B", "B_slash_wedge_B", "B_slash_wedge_square"):
        b.edge("x1", "a1", 2)
        b.edge("x1", "a2", 2)
        b.edge("x2", "a1")
        b.edge("x2", "a2")
        b.grow("x2", depth - 1)
        if family == "B_slash_wedge_B":
            b.edge("x1", "x2", 2)
        if family == "B_slash_wedge_square":
            b.edge("a1", "a2", 4)
        core = {v: v for v in ("x1", "x2", "a1", "a2")}
        return _host(family, params, depth, b, core, list(core))

    if family == "B_circle_wedge_B":
        (n,) = params
        core = {}
        for i in range(1, n + 1):
            j = i % n + 1
            b.edge(f"a{i}", f"a{j}")
            core[f"a{i}"] = f"a{i}"
        b.edge("x1", "a1", 2)
        b.edge("x1", "a2", 2)
        core["x1"] = "x1"
        for i in range(2, n + 1):
            j = i % n + 1
            xi = f"x{i}"
            b.edge(xi, f"a{i}")
            b.edge(xi, f"a{j}")
            b.grow(xi, depth - 1)
            core[xi] = xi
        req = [f"a{i}" for i in range(1, n + 1)] + ["x1"]
        return _host(family, params, depth, b, core, req)

    if family == "C_B_wedge_B":
        b.edge("dot", "x1", 2)
        b.edge("dot", "x2", 2)
        b.edge("x1", "x2", 4)
        b.grow("dot", depth)
        core = {v: v for v in ("dot", "x1", "x2")}
        return _host(family, params, depth, b, core, list(core))

    if family == "D_vee":
        return _build_vee(params, depth, b)

    if family in ("D_circle_wedge_square", "D_circle_wedge_slash",
                  "D_circle_wedge_revslash"):
        return _build_circle_wedge(family, params, depth, b)

    if family in ("D_square_wedge_square", "D_slash_wedge_slash"):
        for xi in ("x1", "x2"):
            b.edge(xi, "a1")
            b.edge(xi, "a2")
            b.edge(xi, "dot")
        if family == "D_slash_wedge_slash":
            b.edge("x1", "x2", 4)
        b.grow("dot", depth - 1)
        core = {v: v for v in ("x1", "x2", "a1", "a2", "dot")}
        return _host(family, params, depth, b, core, list(core))

    if family == "D_boxtimes":
        for i in range(1, 5):
            b.edge(f"a{i}", f"a{i % 4 + 1}")
            b.edge("x1", f"a{i}")
        b.grow("x1", depth - 1)
        core = {v: v for v in ("a1", "a2", "a3", "a4", "x1")}
        return _host(family, params, depth, b, core, list(core))

    raise UnsupportedFamily(family)


def _build_star_part(b: _Builder, star: str, n: Optional[int], depth: int,
                     prefix: str, skip_tree: frozenset[str]) -> dict[str, str]:
    """Add one D-family host, with roles prefixed; returns role -> vertex.

    ``skip_tree`` lists roles whose attached trees are omitted (used when a
    glued family removes them).  Vertex names get the same prefix as roles.
    """
    core: dict[str, str] = {}

    def name(r):
        return prefix + r

    if star == "circle":
        assert n is not None
        for i in range(1, n + 1):
            j = i % n + 1
            b.edge(name(f"a{i}"), name(f"a{j}"))
            core[f"a{i}"] = name(f"a{i}")
        for i in range(1, n + 1):
            j = i % n + 1
            xi = name(f"x{i}")
            b.edge(xi, name(f"a{i}"))
            b.edge(xi, name(f"a{j}"))
            if f"x{i}" not in skip_tree:
                b.grow(xi, depth - 1)
            core[f"x{i}"] = xi
    elif star in ("square", "slash"):
        for xr in ("x1", "x2"):
            xi = name(xr)
            b.edge(xi, name("a1"))
            b.edge(xi, name("a2"))
            if xr not in skip_tree:
                b.grow(xi, depth - 1)
            core[xr] = xi
        if star == "slash":
            b.edge(name("x1"), name("x2"))
        core["a1"] = name("a1")
        core["a2"] = name("a2")
    elif star == "perp":
        b.edge(name("x1"), name("a1"))
        b.edge(name("x1"), name("a2"))
        if "x1" not in skip_tree:
            b.grow(name("x1"), depth)
        core["x1"] = name("x1")
        core["a1"] = name("a1")
        core["a2"] = name("a2")
    else:
        raise UnsupportedFamily(star)
    return core


# roles forming the core of each D-family piece
STAR_CORE = {
    "circle": None,  # a1..an, computed per n
    "square": ("x1", "x2", "a1", "a2"),
    "slash": ("x1", "x2", "a1", "a2"),
    "perp": ("x1", "a1", "a2"),
}


def star_core_roles(star: str, n: Optional[int]) -> tuple[str, ...]:
    if star == "circle":
        return tuple(f"a{i}" for i in range(1, n + 1))
    return STAR_CORE[star]


def _build_vee(params: tuple, depth: int, b: _Builder) -> HostGraph:
    star1, n, star2, m = params
    if star1 == "circle" and star2 == "circle":
        return _build_vee_circles(params, depth, b)
    # glue the two pieces at x1 / x'1, whose trees are removed
    roles1 = _build_star_part(b, star1, n, depth, "", frozenset(["x1"]))
    roles2 = _build_star_part(b, star2, m, depth, "p.", frozenset(["x1"]))
    # identify x1 with p.x1: rewire p.x1's edges onto x1
    merge_from, merge_to = roles2["x1"], roles1["x1"]
    for u, w in list(b.adj[merge_from].items()):
        b.edge(merge_to, u, w)
        del b.adj[u][merge_from]
    del b.adj[merge_from]
    core: dict[str, str] = {}
    for r, v in roles1.items():
        core[r] = v
    for r, v in roles2.items():
        core["p." + r] = merge_to if v == merge_from else v
    core["dot"] = merge_to
    required = {"dot"}
    for star, prefix, nn in ((star1, "", n), (star2, "p.", m)):
        for r in star_core_roles(star, nn):
            if r == "x1":
                continue  # identified with dot
            required.add(prefix + r)
    return _host("D_vee", params, depth, b, core, required)


def _build_vee_circles(params: tuple, depth: int, b: _Builder) -> HostGraph:
    """Glue two circle pieces: their cycles share the identified path.

    With cycles ``a1..an`` and ``a'1..a'm``, the identifications are
    ``x1 = a'1``, ``x2 = a'3``, ``a1 = x'1``, ``a3 = x'2`` and
    ``a2 = a'2 = dot``.
    """
    _, n, _, m = params
    core: dict[str, str] = {}
    # first cycle with its attachments (trees removed at x1, x2)
    for i in range(1, n + 1):
        j = i % n + 1
        b.edge(f"a{i}", f"a{j}")
        core[f"a{i}"] = f"a{i}"
    for i in range(1, n + 1):
        j = i % n + 1
        xi = f"x{i}"
        b.edge(xi, f"a{i}")
        b.edge(xi, f"a{j}")
        if i > 2:
            b.grow(xi, depth - 1)
        core[f"x{i}"] = xi
    # second cycle: a'1 = x1, a'2 = a2, a'3 = x2, rest are fresh b-vertices
    def pa(j):
        if j == 1:
            return "x1"
        if j == 2:
            return "a2"
        if j == 3:
            return "x2"
        return f"p.a{j}"
    for j in range(1, m + 1):
        k = j % m + 1
        b.edge(pa(j), pa(k))
        core[f"p.a{j}"] = pa(j)
    for j in range(1, m + 1):
        k = j % m + 1
        xj = {1: "a1", 2: "a3"}.get(j, f"p.x{j}")
        b.edge(xj, pa(j))
        b.edge(xj, pa(k))
        if j > 2:
            b.grow(xj, depth - 1)
        core[f"p.x{j}"] = xj
    core["dot"] = "a2"
    required = {f"a{i}" for i in range(1, n + 1)}
    required |= {f"p.a{j}" for j in range(1, m + 1)}
    return _host("D_vee", params, depth, b, core, required)


def _build_circle_wedge(family: str, params: tuple, depth: int, b: _Builder) -> HostGraph:
    """Hosts gluing a circle piece onto a square-shaped piece.

    For ``D_circle_wedge_square`` with parameter n: a path ``a1..a(n-1)``
    with tree-attachments ``x1..x(n-2)``, closed up by two extra vertices
    ``q1``, ``q2`` adjacent to both ends of the path.  The slash variants
    use a full cycle ``a1..an`` (ends joined) instead, plus ``q1``, ``q2``
    adjacent to both ``a1`` and ``an``.
    """
    (n,) = params
    core: dict[str, str] = {}
    if family == "D_circle_wedge_square":
        last = n - 1
        closing = False
    else:
        last = n
        closing = True
    for i in range(1, last):
        b.edge(f"a{i}", f"a{i + 1}")
    for i in range(1, last + 1):
        core[f"a{i}"] = f"a{i}"
    if closing:
        b.edge(f"a{last}", "a1")
    for i in range(1, last):
        xi = f"x{i}"
        b.edge(xi, f"a{i}")
        b.edge(xi, f"a{i + 1}")
        b.grow(xi, depth - 1)
        core[f"x{i}"] = xi
    for q in ("q1", "q2"):
        b.edge(q, "a1")
        b.edge(q, f"a{last}")
        core[q] = q
    core["b1"] = f"a{last}"
    core["b2"] = "a1"
    required = {f"a{i}" for i in range(1, last + 1)} | {"q1", "q2"}
    return _host(family, params, depth, b, core, required)
