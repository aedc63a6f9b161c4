"""Recognition of diagrams as members of the named mutation-class families.

A family membership test has two parts: an embedding of the diagram into
the family's host graph as a full (induced) subgraph containing the host
core, and the family's orientation conditions.  Glued ("comma") families
are recognized by splitting the diagram at a cut vertex and recognizing
the two halves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .diagram import Diagram, triple_orientation
from .hosts import HostGraph, build_host, star_core_roles

STAR_KINDS = ("circle", "square", "slash", "perp")
STAR_HOST = {"circle": "D_circle", "square": "D_square",
             "slash": "D_slash", "perp": "D_perp"}
_STAR_ORDER = {s: i for i, s in enumerate(STAR_KINDS)}

_DISPLAY = {
    "A": "A", "B": "B",
    "D_circle": "D_(O,{n})", "D_square": "D_[]", "D_slash": "D_[/]",
    "D_perp": "D_T",
    "B_comma": "B_({star},B) width {width}",
    "B_square_wedge_B": "B_([]^B)", "B_slash_wedge_B": "B_([/]^B)",
    "B_slash_wedge_square": "B_([/]^[])",
    "B_circle_wedge_B": "B_((O,{n})^B)", "B_circle_wedge_revB": "B_((O,{n})^revB)",
    "C_comma": "C_(B,B) width {width}", "C_B_wedge_B": "C_(B^B)",
    "D_comma": "D_({star},{star2}) width {width}",
    "D_vee": "D_({star}v{star2})",
    "D_circle_wedge_square": "D_((O,{n})^[])",
    "D_circle_wedge_slash": "D_((O,{n})^[/])",
    "D_circle_wedge_revslash": "D_((O,{n})^rev[/])",
    "D_square_wedge_square": "D_([]^[])", "D_slash_wedge_slash": "D_([/]^[/])",
    "D_boxtimes": "D_boxx",
}


@dataclass(frozen=True)
class FamilyId:
    """Identity of a family: its kind plus any star/cycle-length parameters."""

    kind: str
    n: Optional[int] = None
    m: Optional[int] = None
    stars: Optional[tuple[str, ...]] = None

    def display(self) -> str:
        t = _DISPLAY[self.kind]
        star = star2 = ""
        if self.stars:
            def fmt(s, nn):
                base = {"circle": "(O,{})".format(nn), "square": "[]",
                        "slash": "[/]", "perp": "T"}
                return base[s]
            star = fmt(self.stars[0], self.n)
            if len(self.stars) > 1:
                star2 = fmt(self.stars[1], self.m)
        return (t.replace("{n}", str(self.n)).replace("{m}", str(self.m))
                 .replace("{star2}", star2).replace("{star}", star)
                 .replace(" width {width}", ""))

    @property
    def dynkin_type(self) -> str:
        return FAMILY_TYPE[self.kind]


FAMILY_TYPE = {
    "A": "A", "B": "B",
    "D_circle": "D", "D_square": "D", "D_slash": "D", "D_perp": "D",
    "B_comma": "B1", "B_square_wedge_B": "B1", "B_slash_wedge_B": "B1",
    "B_slash_wedge_square": "B1", "B_circle_wedge_B": "B1",
    "B_circle_wedge_revB": "B1",
    "C_comma": "C1", "C_B_wedge_B": "C1",
    "D_comma": "D1", "D_vee": "D1", "D_circle_wedge_square": "D1",
    "D_circle_wedge_slash": "D1", "D_circle_wedge_revslash": "D1",
    "D_square_wedge_square": "D1", "D_slash_wedge_slash": "D1",
    "D_boxtimes": "D1",
}


@dataclass
class SideMatch:
    """A recognized half of a glued diagram, in whole-diagram vertex ids."""

    star: Optional[str]          # None for a weight-2 tree side
    n: Optional[int]
    vertices: frozenset[int]
    roles: dict[str, int]


@dataclass
class SplitInfo:
    z: int
    side1: SideMatch
    side2: SideMatch


@dataclass
class FamilyMatch:
    family: FamilyId
    roles: dict[str, int]                 # role -> diagram vertex
    embedding: Optional[dict[int, str]] = None   # diagram vertex -> host vertex
    width: Optional[int] = None
    split: Optional[SplitInfo] = None
    params: Optional[tuple] = None        # parameters in role order (side one
                                          # of the roles first), before the
                                          # canonical reordering in ``family``


# --------------------------------------------------------------------------
# host embedding


def iter_host_embeddings(d: Diagram, host: HostGraph,
                         anchor: Optional[tuple[int, str]] = None
                         ) -> Iterator[dict[int, str]]:
    """All embeddings of ``d`` onto full subgraphs of ``host`` covering the core.

    Yields maps (diagram vertex -> host vertex).  Weights must match exactly
    and non-adjacency is preserved (full subgraph).  ``anchor`` optionally
    pins one diagram vertex to one host vertex; it is used for the family
    ``A`` host, whose automorphism group is vertex-transitive.
    """
    n = d.n
    hadj = host.adj
    req = sorted({host.core[r] for r in host.required})
    if n < len(req) or not d.is_connected():
        return

    # order required host vertices so each is host-adjacent to an earlier one
    # when possible (the cores here are connected except for isolated roles)
    order_req: list[str] = []
    rest = set(req)
    while rest:
        nxt = None
        for hv in sorted(rest):
            if any(u in order_req for u in hadj[hv]):
                nxt = hv
                break
        if nxt is None:
            nxt = sorted(rest)[0]
        order_req.append(nxt)
        rest.discard(nxt)

    dweight = d.weight
    und = d.und

    def stage1(i: int, psi: dict[str, int], used: set[int]) -> Iterator[dict[str, int]]:
        if i == len(order_req):
            yield dict(psi)
            return
        hv = order_req[i]
        # candidates: neighbours (in d) of the image of a mapped host-neighbour
        cands: Optional[list[int]] = None
        for hu in hadj[hv]:
            if hu in psi:
                w = hadj[hv][hu]
                cands = [dv for dv, wd in und[psi[hu]].items() if wd == w]
                break
        if cands is None:
            cands = list(range(n))
        for dv in cands:
            if dv in used:
                continue
            ok = True
            for hu, du in psi.items():
                if hadj[hv].get(hu, 0) != dweight(dv, du):
                    ok = False
                    break
            if ok:
                psi[hv] = dv
                used.add(dv)
                yield from stage1(i + 1, psi, used)
                del psi[hv]
                used.discard(dv)

    init_psi: dict[str, int] = {}
    init_used: set[int] = set()
    if anchor is not None:
        dv0, hv0 = anchor
        init_psi[hv0] = dv0
        init_used.add(dv0)

    for psi in stage1(0, dict(init_psi), set(init_used)):
        phi = {dv: hv for hv, dv in psi.items()}
        yield from _extend(d, host, phi)


def _extend(d: Diagram, host: HostGraph, phi: dict[int, str]) -> Iterator[dict[int, str]]:
    """Extend a partial embedding to all diagram vertices."""
    n = d.n
    hadj = host.adj
    und = d.und
    # BFS order over unmapped vertices, each with a mapped predecessor
    order: list[tuple[int, int]] = []   # (vertex, mapped-or-earlier neighbour)
    placed = set(phi)
    queue = list(phi)
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for u in und[v]:
            if u not in placed:
                placed.add(u)
                order.append((u, v))
                queue.append(u)
    if len(placed) != n:
        return  # disconnected from the core part

    used = set(phi.values())

    def rec(idx: int) -> Iterator[dict[int, str]]:
        if idx == len(order):
            yield dict(phi)
            return
        v, parent = order[idx]
        hp = phi[parent]
        w_need = und[parent][v]
        for hv, w in hadj[hp].items():
            if w != w_need or hv in used:
                continue
            ok = True
            for dv2, hv2 in phi.items():
                if hadj[hv].get(hv2, 0) != und[v].get(dv2, 0):
                    ok = False
                    break
            if ok:
                phi[v] = hv
                used.add(hv)
                yield from rec(idx + 1)
                del phi[v]
                used.discard(hv)

    yield from rec(0)


def _roles_from(phi: dict[int, str], host: HostGraph) -> dict[str, int]:
    inv = {hv: dv for dv, hv in phi.items()}
    return {role: inv[hv] for role, hv in host.core.items() if hv in inv}


def _depth_for(d: Diagram, n_required: int) -> int:
    return max(1, d.n - n_required + 1)


# --------------------------------------------------------------------------
# per-family orientation conditions


def _weight_counts(d: Diagram) -> dict[int, int]:
    out: dict[int, int] = {}
    for _, _, w in d.arcs:
        out[w] = out.get(w, 0) + 1
    return out


def _profile_ok(kind: str, wc: dict[int, int]) -> bool:
    other = sum(v for k, v in wc.items() if k not in (1, 2, 4))
    if other:
        return False
    w2, w4 = wc.get(2, 0), wc.get(4, 0)
    if kind in ("A", "D_circle", "D_square", "D_slash", "D_perp", "D_vee",
                "D_circle_wedge_square", "D_circle_wedge_slash",
                "D_circle_wedge_revslash", "D_square_wedge_square",
                "D_boxtimes", "D_comma"):
        return w2 == 0 and w4 == 0
    if kind == "B":
        return w4 == 0 and 0 <= w2 <= 2
    if kind in ("B_square_wedge_B", "B_circle_wedge_B", "B_circle_wedge_revB"):
        return w2 == 2 and w4 == 0
    if kind == "B_slash_wedge_B":
        return w2 == 3 and w4 == 0
    if kind == "B_slash_wedge_square":
        return w2 == 2 and w4 == 1
    if kind == "C_B_wedge_B":
        return w2 == 2 and w4 == 1
    if kind == "D_slash_wedge_slash":
        return w2 == 0 and w4 == 1
    if kind == "B_comma":
        return 1 <= w2 <= 2 and w4 == 0
    if kind == "C_comma":
        return 2 <= w2 <= 4 and w4 == 0
    return True


def _orientation_ok(d: Diagram, kind: str, params: tuple,
                    roles: dict[str, int]) -> bool:
    if kind in ("A", "B", "D_circle", "D_square", "D_slash", "D_perp",
                "B_square_wedge_B", "B_slash_wedge_B", "B_slash_wedge_square",
                "B_circle_wedge_B", "C_B_wedge_B",
                "D_circle_wedge_slash", "D_slash_wedge_slash"):
        return d.is_cyclically_oriented()
    if kind == "D_vee":
        if params[0] == "circle" and params[2] == "circle":
            # the outer ring (core minus the join vertex) cannot be oriented
            # consistently with the cycles through the join vertex, so it is
            # exempt (its orientation is forced)
            _, n, _, m = params
            ring = (["x1", "x2"]
                    + [f"a{i}" for i in range(1, n + 1) if i != 2]
                    + [f"p.a{j}" for j in range(4, m + 1)])
            exempt = frozenset(roles[r] for r in ring)
            return all(d.cycle_is_directed(cyc)
                       for cyc in d.chordless_cycles() if cyc != exempt)
        return d.is_cyclically_oriented()
    if kind == "D_boxtimes":
        # the outer square cannot be oriented consistently with its four
        # triangles, so it is exempt (its orientation is forced alternating)
        outer = frozenset(roles[f"a{i}"] for i in range(1, 5))
        return all(d.cycle_is_directed(cyc)
                   for cyc in d.chordless_cycles() if cyc != outer)
    if kind == "B_circle_wedge_revB":
        (n,) = params
        e = (roles["a1"], roles["a2"])
        cyc = frozenset(roles[f"a{i}"] for i in range(1, n + 1))
        if d.cycle_is_directed(cyc):
            return False
        return d.is_cyclically_oriented(exclude_edge=e)
    if kind == "D_circle_wedge_revslash":
        (n,) = params
        e = (roles["b1"], roles["b2"])
        cyc = frozenset(roles[f"a{i}"] for i in range(1, n + 1))
        if d.cycle_is_directed(cyc):
            return False
        # with the closing edge removed, the pendant-pair square becomes a
        # chordless cycle whose orientation is forced non-directed; exempt it
        quad = frozenset((roles["b1"], roles["b2"], roles["q1"], roles["q2"]))
        return all(d.cycle_is_directed(c, e)
                   for c in d.chordless_cycles(exclude_edge=e) if c != quad)
    if kind == "D_circle_wedge_square":
        (n,) = params
        # every chordless cycle is directed except the one through the second
        # pendant-pair vertex, which must not be (this is what separates the
        # family from its closed-cycle sibling)
        order = [roles[f"a{i}"] for i in range(1, n)] + [roles["q2"]]
        exempt = frozenset(order)
        for cyc in d.chordless_cycles():
            if cyc == exempt:
                continue
            if not d.cycle_is_directed(cyc):
                return False
        # the non-directed cycle must break direction exactly at the two
        # vertices shared with the pendant pair: they are its unique source
        # and sink, every other vertex passes the flow straight through
        arcs = {(t, h) for t, h, _ in d.arcs}
        length = len(order)
        for idx, v in enumerate(order):
            prev = order[(idx - 1) % length]
            nxt = order[(idx + 1) % length]
            out = ((v, prev) in arcs) + ((v, nxt) in arcs)
            is_glue = v in (roles["a1"], roles[f"a{n - 1}"])
            if (out != 1) != is_glue:
                return False
        return True
    if kind == "D_square_wedge_square":
        for i in (1, 2):
            quad = [roles["x1"], roles["dot"], roles["x2"], roles[f"a{i}"]]
            sub, _ = d.induced(quad)
            if not sub.is_cyclically_oriented():
                return False
        others = [v for v in range(d.n)
                  if v not in (roles["a1"], roles["a2"],
                               roles["x1"], roles["x2"])]
        sub, _ = d.induced(others)
        return sub.is_cyclically_oriented()
    raise ValueError(kind)


_MIN_SIZE = {"D_circle": 5}


def iter_family_matches(d: Diagram, kind: str, params: tuple = (),
                        constituent: bool = False) -> Iterator[FamilyMatch]:
    """All matches of ``d`` against one host family (fixed parameters).

    ``constituent`` relaxes the standalone minimum-size guards used to keep
    the finite-type families disjoint; it is set when recognizing one half
    of a glued diagram.
    """
    if not _profile_ok(kind, _weight_counts(d)):
        return
    if not constituent and d.n < _MIN_SIZE.get(kind, 0):
        return
    if not constituent and kind in ("D_square", "D_slash", "D_perp") and d.n < 4:
        return
    if kind == "D_vee" and params[0] == "circle" and params[2] == "circle" \
            and d.n < 6:
        return
    # the bare 6-arc core for n=4 coincides with the two-square-joined family;
    # require a vertex beyond the core so the two stay disjoint
    if kind == "D_circle_wedge_square" and params == (4,) and d.n < 6:
        return
    # the bare n=3 core of the reversed-closing-edge family coincides with
    # the open-path family's core plus one attachment; same resolution
    if kind == "D_circle_wedge_revslash" and params == (3,) and d.n < 6:
        return
    host_kind = kind
    if kind == "B_circle_wedge_revB":
        host_kind = "B_circle_wedge_B"
    try:
        host = build_host(host_kind, params, _host_depth(d, host_kind, params))
    except Exception:
        return
    if len({host.core[r] for r in host.required}) > d.n:
        return
    anchor = (0, "x") if kind == "A" else None
    seen_roles: set[tuple] = set()
    for phi in iter_host_embeddings(d, host, anchor=anchor):
        roles = _roles_from(phi, host)
        key = tuple(sorted(roles.items()))
        if key in seen_roles:
            continue
        seen_roles.add(key)
        if not _orientation_ok(d, kind, params, roles):
            continue
        fid = _family_id(kind, params)
        yield FamilyMatch(fid, roles, embedding=dict(phi), params=params)


def _family_id(kind: str, params: tuple) -> FamilyId:
    if kind == "D_vee":
        s1, n, s2, m = params
        if (_STAR_ORDER[s1], n or 0) > (_STAR_ORDER[s2], m or 0):
            s1, n, s2, m = s2, m, s1, n
        return FamilyId(kind, n=n, m=m, stars=(s1, s2))
    if params:
        return FamilyId(kind, n=params[0])
    return FamilyId(kind)


def _host_depth(d: Diagram, kind: str, params: tuple) -> int:
    host0 = build_host(kind, params, 1)
    return _depth_for(d, len({host0.core[r] for r in host0.required}))


# --------------------------------------------------------------------------
# glued (comma) families


def _bfs_dist(d: Diagram, sources: set[int]) -> list[int]:
    INF = 10 ** 9
    dist = [INF] * d.n
    queue = []
    for s in sources:
        dist[s] = 0
        queue.append(s)
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for u in d.und[v]:
            if dist[u] > dist[v] + 1:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _iter_star_side(sub: Diagram, z_sub: int) -> Iterator[tuple[str, Optional[int], dict[str, int]]]:
    """Matches of one glued half as a D-family piece, with glue conditions.

    The glue vertex may not carry an ``a`` role; when it lies in the piece's
    core all of its neighbours must too, and otherwise its degree within the
    half is at most two.
    """
    for star in STAR_KINDS:
        if star == "circle":
            param_list = [(nn,) for nn in range(3, sub.n + 1)]
        else:
            param_list = [()]
        for params in param_list:
            nn = params[0] if params else None
            core_roles = set(star_core_roles(star, nn))
            for m in iter_family_matches(sub, STAR_HOST[star], params,
                                         constituent=True):
                roles = m.roles
                zrole = None
                for r, v in roles.items():
                    if v == z_sub:
                        zrole = r
                        break
                if zrole is not None and zrole.startswith("a"):
                    continue
                if zrole in core_roles:
                    core_verts = {roles[r] for r in core_roles if r in roles}
                    if not set(sub.und[z_sub]) <= core_verts:
                        continue
                else:
                    if sub.deg(z_sub) > 2:
                        continue
                yield star, nn, roles


def _iter_b_side(sub: Diagram, z_sub: int) -> Iterator[dict[str, int]]:
    """Matches of one glued half as a weight-2 tree piece."""
    for m in iter_family_matches(sub, "B", (), constituent=True):
        if m.roles["x"] == z_sub:
            continue
        if sub.deg(z_sub) > 2:
            continue
        yield m.roles


def _splits(d: Diagram) -> Iterator[tuple[int, frozenset[int], frozenset[int]]]:
    for z in d.articulation_vertices():
        comps = d.components(exclude=frozenset([z]))
        if len(comps) < 2:
            continue
        c = len(comps)
        for mask in range(1, 2 ** (c - 1)):
            side1 = set()
            side2 = set(comps[c - 1])
            for i in range(c - 1):
                (side1 if (mask >> i) & 1 else side2).update(comps[i])
            yield z, frozenset(side1 | {z}), frozenset(side2 | {z})


def _lift(roles: dict[str, int], inv: dict[int, int]) -> dict[str, int]:
    return {r: inv[v] for r, v in roles.items()}


def iter_comma_matches(d: Diagram, kind: str) -> Iterator[FamilyMatch]:
    """Matches of the glued families (``B_comma``, ``C_comma``, ``D_comma``)."""
    if not _profile_ok(kind, _weight_counts(d)) or not d.is_connected():
        return
    for z, s1, s2 in _splits(d):
        orders = [(s1, s2), (s2, s1)] if kind != "C_comma" else [(s1, s2)]
        for side_a, side_b in orders:
            sub1, idx1 = d.induced(side_a)
            inv1 = {i: v for v, i in idx1.items()}
            sub2, idx2 = d.induced(side_b)
            inv2 = {i: v for v, i in idx2.items()}
            z1, z2 = idx1[z], idx2[z]
            if kind == "B_comma":
                for star, nn, roles1 in _iter_star_side(sub1, z1):
                    for roles2 in _iter_b_side(sub2, z2):
                        r1 = _lift(roles1, inv1)
                        r2 = _lift(roles2, inv2)
                        yield _comma_match(d, kind, z, side_a, side_b,
                                           star, nn, None, None, r1, r2)
            elif kind == "C_comma":
                for roles1 in _iter_b_side(sub1, z1):
                    for roles2 in _iter_b_side(sub2, z2):
                        r1 = _lift(roles1, inv1)
                        r2 = _lift(roles2, inv2)
                        yield _comma_match(d, kind, z, side_a, side_b,
                                           None, None, None, None, r1, r2)
            elif kind == "D_comma":
                for star, nn, roles1 in _iter_star_side(sub1, z1):
                    for star2, mm, roles2 in _iter_star_side(sub2, z2):
                        r1 = _lift(roles1, inv1)
                        r2 = _lift(roles2, inv2)
                        # the glue vertex may lie in at most one core
                        c1 = {r1[r] for r in star_core_roles(star, nn) if r in r1}
                        c2 = {r2[r] for r in star_core_roles(star2, mm) if r in r2}
                        if z in c1 and z in c2:
                            continue
                        m = _comma_match(d, kind, z, side_a, side_b,
                                         star, nn, star2, mm, r1, r2)
                        if m is not None:
                            yield m


def _attach_roles(star: Optional[str], roles: dict[str, int]) -> set[int]:
    """The x-vertices from which the connecting path's length is measured."""
    if star is None:
        return {roles["x"]}
    return {v for r, v in roles.items() if r.startswith("x")}


def _comma_match(d, kind, z, side_a, side_b, star, nn, star2, mm, r1, r2):
    xs1 = _attach_roles(star if kind != "C_comma" else None, r1)
    xs2 = _attach_roles(star2 if kind == "D_comma" else None, r2)
    dist = _bfs_dist(d, xs1)
    best = min(dist[v] for v in xs2)
    if kind == "B_comma":
        width = best - 1
    elif kind == "C_comma":
        width = best - 2
    else:
        both_circle = star == "circle" and star2 == "circle"
        width = best if both_circle else best - 1
        # a glueing that identifies attachment vertices of both halves is a
        # joined (not comma) diagram; exclude it here to keep them disjoint
        if width < 0:
            return None
    side1 = SideMatch(star, nn, side_a, r1)
    side2 = SideMatch(star2 if kind == "D_comma" else None, mm, side_b, r2)
    if kind == "B_comma":
        fid = FamilyId(kind, n=nn, stars=(star,))
    elif kind == "C_comma":
        fid = FamilyId(kind, stars=())
    else:
        if (_STAR_ORDER[star], nn or 0) > (_STAR_ORDER[star2], mm or 0):
            star, nn, star2, mm = star2, mm, star, nn
            side1, side2 = side2, side1
        fid = FamilyId(kind, n=nn, m=mm, stars=(star, star2))
    roles = dict(side1.roles)
    roles.update({"p." + k: v for k, v in side2.roles.items()})
    roles["z"] = z
    if kind == "B_comma":
        mparams = (side1.star, side1.n)
    elif kind == "C_comma":
        mparams = ()
    else:
        mparams = (side1.star, side1.n, side2.star, side2.n)
    return FamilyMatch(fid, roles, width=width,
                       split=SplitInfo(z, side1, side2), params=mparams)


# --------------------------------------------------------------------------
# classification


HOST_FAMILY_ORDER = [
    "A", "B", "D_circle", "D_square", "D_slash", "D_perp",
    "B_square_wedge_B", "B_slash_wedge_B", "B_slash_wedge_square",
    "B_circle_wedge_B", "B_circle_wedge_revB", "C_B_wedge_B",
    "D_vee", "D_circle_wedge_square", "D_circle_wedge_slash",
    "D_circle_wedge_revslash", "D_square_wedge_square",
    "D_slash_wedge_slash", "D_boxtimes",
]
COMMA_FAMILY_ORDER = ["B_comma", "C_comma", "D_comma"]


def _param_choices(d: Diagram, kind: str) -> list[tuple]:
    if kind in ("D_circle", "B_circle_wedge_B", "B_circle_wedge_revB"):
        return [(nn,) for nn in range(3, d.n + 1)]
    if kind in ("D_circle_wedge_square",):
        return [(nn,) for nn in range(3, d.n + 2)]
    if kind in ("D_circle_wedge_slash", "D_circle_wedge_revslash"):
        return [(nn,) for nn in range(3, d.n + 1)]
    if kind == "D_vee":
        out = []
        pairs = []
        for i, s1 in enumerate(STAR_KINDS):
            for s2 in STAR_KINDS[i:]:
                pairs.append((s1, s2))
        for s1, s2 in pairs:
            ns = [(None,)] if s1 != "circle" else [(k,) for k in range(3, d.n + 1)]
            ms = [(None,)] if s2 != "circle" else [(k,) for k in range(3, d.n + 1)]
            for (a,) in ns:
                for (bb,) in ms:
                    if s1 == s2 == "circle" and bb < a:
                        continue
                    out.append((s1, a, s2, bb))
        return out
    return [()]


def iter_all_matches(d: Diagram) -> Iterator[FamilyMatch]:
    """All family matches, host families first, in the documented order."""
    for kind in HOST_FAMILY_ORDER:
        for params in _param_choices(d, kind):
            yield from iter_family_matches(d, kind, params)
    for kind in COMMA_FAMILY_ORDER:
        yield from iter_comma_matches(d, kind)


def all_family_ids(d: Diagram) -> list[FamilyId]:
    """Distinct family identities matching ``d`` (for disjointness checks)."""
    seen: list[FamilyId] = []
    for m in iter_all_matches(d):
        if m.family not in seen:
            seen.append(m.family)
    return seen


@dataclass
class Classification:
    dynkin_type: str       # 'A', 'B', 'D', 'B1', 'C1' or 'D1'
    rank: int
    match: FamilyMatch

    @property
    def type_display(self) -> str:
        base = self.dynkin_type[0] + str(self.rank)
        return base + ("(1)" if self.dynkin_type.endswith("1") else "")


def classify(d: Diagram) -> Optional[Classification]:
    """First family match in the fixed order, or None when unrecognized."""
    for m in iter_all_matches(d):
        t = m.family.dynkin_type
        rank = d.n if t in ("A", "B", "D") else d.n - 1
        return Classification(t, rank, m)
    return None
