"""Mutation-transition tables: which families one mutation step can reach.

Each :class:`TransitionRule` is a data record: a source family kind, the
role class of the mutated vertex, a guard (s-expression over triple
orientations, degrees, parameters and role presence) and target templates.
Within one (source, role) group the rules are tried in order and the first
rule whose guard holds applies, so later rules act as "else" branches.
:func:`transition_targets` interprets the applicable rules into concrete
:class:`TargetPattern` values; rule identifiers are stable so individual
entries can be referenced and audited externally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .diagram import Diagram, triple_orientation
from .hosts import star_core_roles
from .recognize import FamilyId, FamilyMatch, iter_all_matches

Star = tuple[str, Optional[int]]          # ("circle", 4) or ("slash", None)


@dataclass(frozen=True)
class TargetPattern:
    """A concrete allowed successor: family kind, parameters, width set."""

    kind: str
    n: Optional[int] = None
    stars: Optional[frozenset] = None      # frozenset of (Star, count) pairs
    widths: Optional[frozenset] = None     # allowed widths, None = no bound

    def accepts(self, fid: FamilyId, width: Optional[int]) -> bool:
        if fid.kind != self.kind:
            return False
        if self.stars is not None:
            if _star_multiset(_fid_stars(fid)) != self.stars:
                return False
        elif self.n is not None and fid.n != self.n:
            return False
        if self.widths is not None:
            if width is None or width not in self.widths:
                return False
        return True


def _fid_stars(fid: FamilyId) -> tuple[Star, ...]:
    if not fid.stars:
        return ()
    sizes = (fid.n, fid.m)
    return tuple((s, sizes[i] if s == "circle" else None)
                 for i, s in enumerate(fid.stars))


def _star_multiset(stars: Iterable[Star]) -> frozenset:
    counts: dict[Star, int] = {}
    for s in stars:
        counts[s] = counts.get(s, 0) + 1
    return frozenset(counts.items())


@dataclass(frozen=True)
class TransitionRule:
    rule_id: str
    source: str                  # family kind
    role: str                    # role class of the mutated vertex
    guard: tuple                 # s-expression, ("true",) if unconditional
    targets: tuple               # target templates


class UncoveredCase(Exception):
    """A family match whose mutated vertex no rule covers."""

    def __init__(self, fid: Optional[FamilyId], role: str):
        kind = fid.kind if fid is not None else "<no family>"
        super().__init__(f"no transition rule for {kind} role {role}")
        self.fid = fid
        self.role = role


# --------------------------------------------------------------------------
# guard interpreter


def _vert(ctx, r):
    if r == "k":
        return ctx["k"]
    return ctx["roles"][r]


def _cmp(a, op, b) -> bool:
    return {"=": a == b, ">": a > b, "<": a < b,
            ">=": a >= b, "<=": a <= b}[op]


def eval_guard(g: tuple, ctx) -> bool:
    op = g[0]
    if op == "true":
        return True
    if op == "and":
        return all(eval_guard(x, ctx) for x in g[1:])
    if op == "or":
        return any(eval_guard(x, ctx) for x in g[1:])
    if op == "not":
        return not eval_guard(g[1], ctx)
    if op == "n":
        return _cmp(ctx["n"], g[1], g[2])
    if op == "m":
        return _cmp(ctx["m"], g[1], g[2])
    if op == "c":
        return _cmp(ctx["cn"], g[1], g[2])
    if op == "size":
        return _cmp(ctx["d"].n, g[1], g[2])
    if op == "w":
        return _cmp(ctx["width"], g[1], g[2])
    if op == "deg_k":
        return _cmp(ctx["d"].deg(ctx["k"]), g[1], g[2])
    if op == "degpm_k_has":
        d, k = ctx["d"], ctx["k"]
        return g[1] in (d.deg_out(k), d.deg_in(k))
    if op == "role_present":
        return g[1] in ctx["roles"]
    if op == "stars_are":
        s = ctx["stars"]
        return s in (tuple(g[1:]), tuple(reversed(g[1:])))
    if op == "mystar":
        return ctx["mine_star"][0] == g[1]
    if op == "otherstar":
        return ctx["other_star"][0] == g[1]
    if op == "opp_x_present":
        return _opposite_x_present(ctx["d"], ctx["roles"], ctx["k"])
    if op in ("linear", "nonlinear"):
        return triple_orientation(ctx["d"], _vert(ctx, g[1]),
                                  _vert(ctx, g[2]), _vert(ctx, g[3])) == op
    if op == "exists_tree_nbr":
        # a neighbour y of k outside the labeled core such that the triple
        # (other, k, y) carries the given orientation
        orient, other = g[1], g[2]
        d, k = ctx["d"], ctx["k"]
        core = set(ctx["roles"].values())
        ov = _vert(ctx, other)
        return any(triple_orientation(d, ov, k, y) == orient
                   for y in d.und[k] if y not in core)
    if op == "exists_nbr_both":
        # a neighbour y of k whose triples with both named vertices (middle
        # k) carry the given orientation; "outside" restricts y to non-core
        orient, ra, rb, outside = g[1], g[2], g[3], g[4]
        d, k = ctx["d"], ctx["k"]
        core = set(ctx["roles"].values())
        va, vb = _vert(ctx, ra), _vert(ctx, rb)
        for y in d.und[k]:
            if y in (va, vb) or (outside and y in core):
                continue
            if (triple_orientation(d, va, k, y) == orient
                    and triple_orientation(d, vb, k, y) == orient):
                return True
        return False
    raise ValueError(g)


def _opposite_x_present(d: Diagram, roles: dict[str, int], k: int) -> bool:
    # an attachment position not adjacent to the mutated cycle vertex
    for r, v in roles.items():
        if r.startswith("x") and k not in d.und[v] and v != k:
            return True
    return False


# --------------------------------------------------------------------------
# target templates
#
# ("same",)                            — the source family id, any width
# ("fam", kind, nexpr)                 — parametrized host family
# ("comma", s1, s2, wspec)             — glued family with two star halves
# ("bcomma", s1, wspec)                — glued family with one star half
# ("ccomma", wspec)                    — glued weight-4 family
# ("vee", s1, s2)                      — joined family with two star halves
# star expressions:
#   ("lit", kind, nexpr)   a fixed star
#   ("succ",)              stars the mutated half can turn into
#   ("other",)             the untouched half's star
#   ("othergrown",)        the untouched half's star, circles grown by one
#   ("mine", delta)        the mutated half's star with its size shifted
# nexpr: None | int | "n"/"m"/"c" with optional signed offset ("n+1", "c-1")
# wspec: None | "0" | "pm1" (within one of the source) | "le1" (may grow by
#        one, never shrink)


def _nexpr(e, ctx) -> Optional[int]:
    if e is None or isinstance(e, int):
        return e
    base = {"n": ctx["n"], "m": ctx["m"], "c": ctx["cn"]}[e[0]]
    return base if len(e) == 1 else base + int(e[1:])


def _widths(wspec, ctx) -> Optional[frozenset]:
    if wspec is None:
        return None
    if wspec == "0":
        return frozenset([0])
    w = ctx["width"]
    if wspec == "pm1":
        return frozenset(x for x in (w - 1, w, w + 1) if x >= 0)
    if wspec == "le1":
        return frozenset(x for x in (w, w + 1) if x >= 0)
    raise ValueError(wspec)


def _grow(star: Star) -> Star:
    return (star[0], star[1] + 1) if star[0] == "circle" else star


# --------------------------------------------------------------------------
# the rules


def R(rule_id, source, role, guard, *targets):
    return TransitionRule(rule_id, source, role, guard, tuple(targets))


_T = ("true",)

RULES: list[TransitionRule] = [
    # tree-like families: closed under every mutation
    R("a.any", "A", "any", _T, ("same",)),
    R("b.any", "B", "any", _T, ("same",)),

    # plain D families
    R("circ.out", "D_circle", "out", _T, ("same",)),
    R("circ.x", "D_circle", "x", _T, ("fam", "D_circle", "n+1")),
    R("circ.a.big", "D_circle", "a", ("n", ">", 3), ("fam", "D_circle", "n-1")),
    R("circ.a.sq", "D_circle", "a", ("opp_x_present",),
      ("fam", "D_square", None)),
    R("circ.a.perp", "D_circle", "a", _T, ("fam", "D_perp", None)),
    R("sq.out", "D_square", "out", _T, ("same",)),
    R("sq.x.big", "D_square", "x", ("size", ">", 4), ("fam", "D_circle", 3)),
    R("sq.x.min", "D_square", "x", _T, ("fam", "D_slash", None)),
    R("sq.a", "D_square", "a", _T, ("fam", "D_slash", None)),
    R("sl.out", "D_slash", "out", _T, ("same",)),
    R("sl.a", "D_slash", "a", _T, ("fam", "D_square", None)),
    R("sl.x.keep", "D_slash", "x", ("exists_tree_nbr", "nonlinear", "other_x"),
      ("fam", "D_slash", None)),
    R("sl.x.perp", "D_slash", "x", _T, ("fam", "D_perp", None)),
    R("pp.out", "D_perp", "out", _T, ("same",)),
    R("pp.a", "D_perp", "a", _T, ("fam", "D_perp", None)),
    R("pp.x.slash", "D_perp", "x",
      ("exists_nbr_both", "linear", "a1", "a2", False),
      ("fam", "D_slash", None)),
    R("pp.x.keep", "D_perp", "x",
      ("and", ("deg_k", "=", 3),
       ("exists_nbr_both", "nonlinear", "a1", "a2", True)),
      ("fam", "D_perp", None)),
    R("pp.x.circ", "D_perp", "x", _T, ("fam", "D_circle", 3)),

    # glued families, attachment-vertex cases (zero width)
    R("bc.att.circ", "B_comma", "att", ("mystar", "circle"),
      ("fam", "B_circle_wedge_B", "c+1")),
    R("bc.att.sq", "B_comma", "att", ("mystar", "square"),
      ("fam", "B_circle_wedge_B", 3)),
    R("bc.att.sl.wedge", "B_comma", "att",
      ("and", ("mystar", "slash"), ("nonlinear", "other_att", "k", "other_x")),
      ("fam", "B_slash_wedge_B", None)),
    R("bc.att.sl.keep", "B_comma", "att",
      ("and", ("mystar", "slash"), ("deg_k", "=", 5)),
      ("bcomma", ("lit", "slash", None), "0")),
    R("bc.att.sl.perp", "B_comma", "att", ("mystar", "slash"),
      ("bcomma", ("lit", "perp", None), "0")),
    R("bc.att.pp.wedge", "B_comma", "att",
      ("and", ("mystar", "perp"),
       ("linear", "a1", "k", "other_att"), ("linear", "a2", "k", "other_att")),
      ("fam", "B_slash_wedge_B", None)),
    R("bc.att.pp.sl", "B_comma", "att",
      ("and", ("mystar", "perp"), ("deg_k", "=", 4),
       ("nonlinear", "a1", "k", "other_att"),
       ("nonlinear", "a2", "k", "other_att")),
      ("bcomma", ("lit", "slash", None), "0")),
    R("bc.att.pp.keep", "B_comma", "att",
      ("and", ("mystar", "perp"), ("deg_k", "=", 3),
       ("nonlinear", "a1", "k", "other_att"),
       ("nonlinear", "a2", "k", "other_att")),
      ("bcomma", ("lit", "perp", None), "0")),
    R("bc.att.pp.circ", "B_comma", "att", ("mystar", "perp"),
      ("fam", "B_circle_wedge_B", 3)),

    R("dc.att.circ", "D_comma", "att", ("mystar", "circle"),
      ("vee", ("mine", 1), ("othergrown",))),
    R("dc.att.sq.c", "D_comma", "att",
      ("and", ("mystar", "square"), ("otherstar", "circle")),
      ("comma", ("lit", "circle", 3), ("other",), "0")),
    R("dc.att.sq", "D_comma", "att", ("mystar", "square"),
      ("vee", ("lit", "circle", 3), ("other",))),
    R("dc.att.sl.vee", "D_comma", "att",
      ("and", ("mystar", "slash"), ("nonlinear", "other_att", "k", "other_x")),
      ("vee", ("lit", "slash", None), ("other",))),
    R("dc.att.sl.keep", "D_comma", "att",
      ("and", ("mystar", "slash"), ("deg_k", "=", 5)),
      ("comma", ("lit", "slash", None), ("other",), "0")),
    R("dc.att.sl.perp", "D_comma", "att", ("mystar", "slash"),
      ("comma", ("lit", "perp", None), ("other",), "0")),
    R("dc.att.pp.vee", "D_comma", "att",
      ("and", ("mystar", "perp"),
       ("linear", "a1", "k", "other_att"), ("linear", "a2", "k", "other_att")),
      ("vee", ("lit", "slash", None), ("other",))),
    R("dc.att.pp.sl", "D_comma", "att",
      ("and", ("mystar", "perp"), ("deg_k", "=", 4),
       ("nonlinear", "a1", "k", "other_att"),
       ("nonlinear", "a2", "k", "other_att")),
      ("comma", ("lit", "slash", None), ("other",), "0")),
    R("dc.att.pp.keep", "D_comma", "att",
      ("and", ("mystar", "perp"), ("deg_k", "=", 3),
       ("nonlinear", "a1", "k", "other_att"),
       ("nonlinear", "a2", "k", "other_att")),
      ("comma", ("lit", "perp", None), ("other",), "0")),
    R("dc.att.pp.c0", "D_comma", "att",
      ("and", ("mystar", "perp"), ("otherstar", "circle")),
      ("comma", ("lit", "circle", 3), ("other",), "0")),
    R("dc.att.pp.circ", "D_comma", "att", ("mystar", "perp"),
      ("vee", ("lit", "circle", 3), ("other",))),

    # glued families, generic width behaviour
    R("bc.w+", "B_comma", "any", ("w", ">", 0), ("bcomma", ("succ",), "pm1")),
    R("bc.w0", "B_comma", "any", _T, ("bcomma", ("succ",), "le1")),
    R("dc.w+", "D_comma", "any", ("w", ">", 0),
      ("comma", ("succ",), ("other",), "pm1")),
    R("dc.w0", "D_comma", "any", _T,
      ("comma", ("succ",), ("other",), "le1"),
      ("vee", ("succ",), ("other",))),
    R("cc.w+", "C_comma", "any", ("w", ">", 0), ("ccomma", "pm1")),
    R("cc.w0", "C_comma", "any", _T, ("ccomma", "le1")),
    R("cc.dot.wedge", "C_comma", "dot", ("linear", "att1", "k", "att2"),
      ("fam", "C_B_wedge_B", None)),
    R("cc.dot.keep", "C_comma", "dot", _T, ("ccomma", None)),
    R("cw.dot", "C_B_wedge_B", "dot", _T, ("ccomma", "0")),
    R("cw.other", "C_B_wedge_B", "any", _T, ("same",)),

    # joined families of the weight-2 type
    R("bw.out", "B_circle_wedge_B", "out", _T, ("same",)),
    R("bw.x1", "B_circle_wedge_B", "x1", _T,
      ("fam", "B_circle_wedge_revB", "n")),
    R("bw.xi", "B_circle_wedge_B", "xi", _T,
      ("fam", "B_circle_wedge_B", "n+1")),
    R("bw.ai.big", "B_circle_wedge_B", "ai", ("n", ">", 3),
      ("fam", "B_circle_wedge_B", "n-1")),
    R("bw.ai.min", "B_circle_wedge_B", "ai", _T,
      ("fam", "B_square_wedge_B", None)),
    R("bw.a12.big", "B_circle_wedge_B", "a12", ("n", ">", 3),
      ("bcomma", ("lit", "circle", "n-1"), "0")),
    R("bw.a12.sq", "B_circle_wedge_B", "a12", ("opp_x_present",),
      ("bcomma", ("lit", "square", None), "0")),
    R("bw.a12.perp", "B_circle_wedge_B", "a12", _T,
      ("bcomma", ("lit", "perp", None), "0")),
    R("br.out", "B_circle_wedge_revB", "out", _T, ("same",)),
    R("br.x1", "B_circle_wedge_revB", "x1", _T,
      ("fam", "B_circle_wedge_B", "n")),
    R("br.xi", "B_circle_wedge_revB", "xi", _T,
      ("fam", "B_circle_wedge_revB", "n+1")),
    R("br.ai.big", "B_circle_wedge_revB", "ai", ("n", ">", 3),
      ("fam", "B_circle_wedge_revB", "n-1")),
    R("br.ai.min", "B_circle_wedge_revB", "ai", _T,
      ("fam", "B_slash_wedge_square", None)),
    R("br.a12", "B_circle_wedge_revB", "a12", _T,
      ("fam", "B_circle_wedge_revB", "n")),

    R("bsq.out", "B_square_wedge_B", "out", _T, ("same",)),
    R("bsq.x2", "B_square_wedge_B", "x2", _T, ("fam", "B_circle_wedge_B", 3)),
    R("bsq.x1", "B_square_wedge_B", "x1", _T,
      ("fam", "B_slash_wedge_square", None)),
    R("bsq.a", "B_square_wedge_B", "a", _T, ("fam", "B_slash_wedge_B", None)),
    R("bsl.out", "B_slash_wedge_B", "out", _T, ("same",)),
    R("bsl.x2.sl", "B_slash_wedge_B", "x2",
      ("exists_tree_nbr", "nonlinear", "x1"),
      ("bcomma", ("lit", "slash", None), "0")),
    R("bsl.x2.perp", "B_slash_wedge_B", "x2", _T,
      ("bcomma", ("lit", "perp", None), "0")),
    R("bsl.x1", "B_slash_wedge_B", "x1", _T, ("fam", "B_slash_wedge_B", None)),
    R("bsl.a", "B_slash_wedge_B", "a", _T, ("fam", "B_square_wedge_B", None)),
    R("bss.out", "B_slash_wedge_square", "out", _T, ("same",)),
    R("bss.x2", "B_slash_wedge_square", "x2", _T,
      ("fam", "B_circle_wedge_revB", 3)),
    R("bss.x1", "B_slash_wedge_square", "x1", _T,
      ("fam", "B_square_wedge_B", None)),
    R("bss.a", "B_slash_wedge_square", "a", _T,
      ("fam", "B_slash_wedge_square", None)),

    # joined families with a shared vertex
    R("dv.side", "D_vee", "side", _T,
      ("comma", ("succ",), ("other",), "0"),
      ("vee", ("succ",), ("other",))),
    R("dv.j1.min", "D_vee", "junction1", ("n", "=", 3),
      ("fam", "D_circle_wedge_square", "m+1")),
    R("dv.j1", "D_vee", "junction1", _T,
      ("vee", ("lit", "circle", "n-1"), ("lit", "circle", "m+1"))),
    R("dv.j2.min", "D_vee", "junction2", ("m", "=", 3),
      ("fam", "D_circle_wedge_square", "n+1")),
    R("dv.j2", "D_vee", "junction2", _T,
      ("vee", ("lit", "circle", "m-1"), ("lit", "circle", "n+1"))),
    R("dv.cc.out", "D_vee", "cc_out", _T, ("same",)),
    R("dv.cc.ring1", "D_vee", "cc_ring1", _T,
      ("vee", ("lit", "circle", "n-1"), ("lit", "circle", "m"))),
    R("dv.cc.ring2", "D_vee", "cc_ring2", _T,
      ("vee", ("lit", "circle", "n"), ("lit", "circle", "m-1"))),
    R("dv.cc.x1", "D_vee", "cc_x1", _T,
      ("vee", ("lit", "circle", "n+1"), ("lit", "circle", "m"))),
    R("dv.cc.x2", "D_vee", "cc_x2", _T,
      ("vee", ("lit", "circle", "n"), ("lit", "circle", "m+1"))),
    # shared-vertex cases, two circles
    R("dv.dot.33", "D_vee", "dot",
      ("and", ("stars_are", "circle", "circle"), ("n", "=", 3),
       ("m", "=", 3), ("role_present", "x3"), ("role_present", "p.x3")),
      ("vee", ("lit", "square", None), ("lit", "square", None))),
    R("dv.dot.33b", "D_vee", "dot",
      ("and", ("stars_are", "circle", "circle"), ("n", "=", 3),
       ("m", "=", 3)),
      ("vee", ("lit", "square", None), ("lit", "perp", None))),
    R("dv.dot.n3.sq", "D_vee", "dot",
      ("and", ("stars_are", "circle", "circle"), ("m", "=", 3),
       ("role_present", "p.x3")),
      ("vee", ("lit", "circle", "n-1"), ("lit", "square", None))),
    R("dv.dot.n3.pp", "D_vee", "dot",
      ("and", ("stars_are", "circle", "circle"), ("m", "=", 3)),
      ("vee", ("lit", "circle", "n-1"), ("lit", "perp", None))),
    R("dv.dot.3m.sq", "D_vee", "dot",
      ("and", ("stars_are", "circle", "circle"), ("n", "=", 3),
       ("role_present", "x3")),
      ("vee", ("lit", "circle", "m-1"), ("lit", "square", None))),
    R("dv.dot.3m.pp", "D_vee", "dot",
      ("and", ("stars_are", "circle", "circle"), ("n", "=", 3)),
      ("vee", ("lit", "circle", "m-1"), ("lit", "perp", None))),
    R("dv.dot.nm", "D_vee", "dot", ("stars_are", "circle", "circle"),
      ("comma", ("lit", "circle", "n-1"), ("lit", "circle", "m-1"), "0")),
    # shared-vertex cases, mixed halves
    R("dv.dot.csl", "D_vee", "dot", ("stars_are", "circle", "slash"),
      ("fam", "D_circle_wedge_slash", "c+1")),
    R("dv.dot.csq", "D_vee", "dot", ("stars_are", "circle", "square"),
      ("vee", ("lit", "circle", 3), ("lit", "circle", "c+1"))),
    R("dv.dot.cpp.sl", "D_vee", "dot",
      ("and", ("stars_are", "circle", "perp"),
       ("nonlinear", "other.a1", "k", "other.a2")),
      ("fam", "D_circle_wedge_slash", "c+1")),
    R("dv.dot.cpp.sq", "D_vee", "dot", ("stars_are", "circle", "perp"),
      ("vee", ("lit", "circle", 3), ("lit", "circle", "c+1"))),
    R("dv.dot.slsl.keep", "D_vee", "dot",
      ("and", ("stars_are", "slash", "slash"),
       ("nonlinear", "x2", "k", "p.x2")),
      ("vee", ("lit", "slash", None), ("lit", "slash", None))),
    R("dv.dot.slsl.box", "D_vee", "dot", ("stars_are", "slash", "slash"),
      ("fam", "D_boxtimes", None)),
    R("dv.dot.slsq", "D_vee", "dot", ("stars_are", "slash", "square"),
      ("fam", "D_circle_wedge_slash", 3)),
    R("dv.dot.sqsq", "D_vee", "dot", ("stars_are", "square", "square"),
      ("vee", ("lit", "circle", 3), ("lit", "circle", 3))),
    R("dv.dot.slpp.keep", "D_vee", "dot",
      ("and", ("stars_are", "slash", "perp"), ("degpm_k_has", 4)),
      ("vee", ("lit", "slash", None), ("lit", "perp", None))),
    R("dv.dot.slpp.box", "D_vee", "dot",
      ("and", ("stars_are", "slash", "perp"),
       ("nonlinear", "other.a1", "k", "other.a2")),
      ("fam", "D_boxtimes", None)),
    R("dv.dot.slpp.w", "D_vee", "dot", ("stars_are", "slash", "perp"),
      ("fam", "D_circle_wedge_slash", 3)),
    R("dv.dot.sqpp.w", "D_vee", "dot",
      ("and", ("stars_are", "square", "perp"),
       ("nonlinear", "other.a1", "k", "other.a2")),
      ("fam", "D_circle_wedge_slash", 3)),
    R("dv.dot.sqpp.cc", "D_vee", "dot", ("stars_are", "square", "perp"),
      ("vee", ("lit", "circle", 3), ("lit", "circle", 3))),
    R("dv.dot.pppp.keep", "D_vee", "dot",
      ("and", ("stars_are", "perp", "perp"), ("degpm_k_has", 4)),
      ("vee", ("lit", "perp", None), ("lit", "perp", None))),
    R("dv.dot.pppp.w", "D_vee", "dot",
      ("and", ("stars_are", "perp", "perp"), ("degpm_k_has", 3)),
      ("fam", "D_circle_wedge_slash", 3)),
    R("dv.dot.pppp.box", "D_vee", "dot", ("stars_are", "perp", "perp"),
      ("fam", "D_boxtimes", None)),

    # cycle-closed joined families
    R("cwsq.out", "D_circle_wedge_square", "out", _T, ("same",)),
    R("cwsq.x", "D_circle_wedge_square", "x", _T,
      ("fam", "D_circle_wedge_square", "n+1")),
    R("cwsq.int", "D_circle_wedge_square", "interior", ("n", ">", 3),
      ("fam", "D_circle_wedge_square", "n-1")),
    R("cwsq.b.big", "D_circle_wedge_square", "bullet", ("n", ">", 3),
      ("vee", ("lit", "circle", "n-1"), ("lit", "circle", 3))),
    R("cwsq.b.min", "D_circle_wedge_square", "bullet", ("n", "=", 3),
      ("fam", "D_circle_wedge_square", 3)),
    R("cwsq.q1.big", "D_circle_wedge_square", "q1", ("n", ">", 3),
      ("fam", "D_circle_wedge_slash", "n-1")),
    R("cwsq.q2.big", "D_circle_wedge_square", "q2", ("n", ">", 3),
      ("fam", "D_circle_wedge_revslash", "n-1")),
    R("cwsq.q1.min", "D_circle_wedge_square", "q1", ("n", "=", 3),
      ("fam", "D_square_wedge_square", None)),
    R("cwsq.q2.min", "D_circle_wedge_square", "q2", ("n", "=", 3),
      ("fam", "D_slash_wedge_slash", None)),

    R("cwsl.out", "D_circle_wedge_slash", "out", _T, ("same",)),
    R("cwsl.x", "D_circle_wedge_slash", "x", _T,
      ("fam", "D_circle_wedge_slash", "n+1")),
    R("cwsl.int.big", "D_circle_wedge_slash", "interior", ("n", ">", 3),
      ("fam", "D_circle_wedge_slash", "n-1")),
    R("cwsl.int.min", "D_circle_wedge_slash", "interior", _T,
      ("fam", "D_square_wedge_square", None)),
    R("cwsl.q", "D_circle_wedge_slash", "q", _T,
      ("fam", "D_circle_wedge_square", "n+1")),
    R("cwsl.b.big5", "D_circle_wedge_slash", "bullet",
      ("and", ("n", ">", 3), ("deg_k", "=", 5)),
      ("vee", ("lit", "circle", "n-1"), ("lit", "slash", None))),
    R("cwsl.b.big", "D_circle_wedge_slash", "bullet", ("n", ">", 3),
      ("vee", ("lit", "circle", "n-1"), ("lit", "perp", None))),
    R("cwsl.b.min.full", "D_circle_wedge_slash", "bullet",
      ("and", ("role_present", "x1"), ("role_present", "x2")),
      ("vee", ("lit", "square", None), ("lit", "slash", None))),
    R("cwsl.b.min5", "D_circle_wedge_slash", "bullet",
      ("and", ("or", ("role_present", "x1"), ("role_present", "x2")),
       ("deg_k", "=", 5)),
      ("vee", ("lit", "slash", None), ("lit", "perp", None))),
    R("cwsl.b.min.sq", "D_circle_wedge_slash", "bullet",
      ("or", ("role_present", "x1"), ("role_present", "x2")),
      ("vee", ("lit", "square", None), ("lit", "perp", None))),
    R("cwsl.b.min.pp", "D_circle_wedge_slash", "bullet", _T,
      ("vee", ("lit", "perp", None), ("lit", "perp", None))),

    R("cwrs.out", "D_circle_wedge_revslash", "out", _T, ("same",)),
    R("cwrs.x", "D_circle_wedge_revslash", "x", _T,
      ("fam", "D_circle_wedge_revslash", "n+1")),
    R("cwrs.int.big", "D_circle_wedge_revslash", "interior", ("n", ">", 3),
      ("fam", "D_circle_wedge_revslash", "n-1")),
    R("cwrs.int.min", "D_circle_wedge_revslash", "interior", _T,
      ("fam", "D_slash_wedge_slash", None)),
    R("cwrs.b", "D_circle_wedge_revslash", "bullet", _T,
      ("fam", "D_circle_wedge_revslash", "n")),
    R("cwrs.q", "D_circle_wedge_revslash", "q", _T,
      ("fam", "D_circle_wedge_square", "n+1")),

    # doubly-joined families and the crossed square
    R("dss.out", "D_square_wedge_square", "out", _T, ("same",)),
    R("dss.dot", "D_square_wedge_square", "dot", _T,
      ("fam", "D_circle_wedge_slash", 3)),
    R("dss.x", "D_square_wedge_square", "x", _T, ("fam", "D_boxtimes", None)),
    R("dss.a", "D_square_wedge_square", "a", _T,
      ("fam", "D_circle_wedge_square", 3)),
    R("dll.out", "D_slash_wedge_slash", "out", _T, ("same",)),
    R("dll.dot", "D_slash_wedge_slash", "dot", _T,
      ("fam", "D_circle_wedge_revslash", 3)),
    R("dll.x", "D_slash_wedge_slash", "x", _T,
      ("fam", "D_slash_wedge_slash", None)),
    R("dll.a", "D_slash_wedge_slash", "a", _T,
      ("fam", "D_circle_wedge_square", 3)),
    R("box.out", "D_boxtimes", "out", _T, ("same",)),
    R("box.a", "D_boxtimes", "a", _T, ("fam", "D_square_wedge_square", None)),
    R("box.x.6", "D_boxtimes", "x", ("deg_k", "=", 6),
      ("vee", ("lit", "slash", None), ("lit", "slash", None))),
    R("box.x.5", "D_boxtimes", "x", ("deg_k", "=", 5),
      ("vee", ("lit", "slash", None), ("lit", "perp", None))),
    R("box.x.4", "D_boxtimes", "x", _T,
      ("vee", ("lit", "perp", None), ("lit", "perp", None))),
]

_RULES_BY_KEY: dict[tuple[str, str], list[TransitionRule]] = {}
for _r in RULES:
    _RULES_BY_KEY.setdefault((_r.source, _r.role), []).append(_r)


# --------------------------------------------------------------------------
# role classification


def _aligned(match: FamilyMatch) -> tuple[Optional[str], Optional[int],
                                          Optional[str], Optional[int]]:
    """(star1, size1, star2, size2) in the order the roles are named."""
    kind = match.family.kind
    p = match.params or ()
    if kind in ("D_vee", "D_comma"):
        return p[0], p[1], p[2], p[3]
    if kind == "B_comma":
        return p[0], p[1], None, None
    return None, match.family.n, None, None


def _role_class(d: Diagram, match: FamilyMatch, k: int) -> list[str]:
    kind = match.family.kind
    names = [r for r, v in match.roles.items() if v == k]
    if kind in ("A", "B"):
        return ["any"]
    if kind in ("D_circle", "D_square", "D_slash", "D_perp"):
        if any(r.startswith("x") for r in names):
            return ["x"]
        if any(r.startswith("a") for r in names):
            return ["a"]
        return ["out"]
    if kind in ("B_comma", "C_comma", "D_comma"):
        return _comma_roles(d, match, k)
    if kind in ("B_circle_wedge_B", "B_circle_wedge_revB"):
        if "x1" in names:
            return ["x1"]
        if any(r.startswith("x") for r in names):
            return ["xi"]
        if "a1" in names or "a2" in names:
            return ["a12"]
        if any(r.startswith("a") for r in names):
            return ["ai"]
        return ["out"]
    if kind in ("B_square_wedge_B", "B_slash_wedge_B", "B_slash_wedge_square"):
        if "x1" in names:
            return ["x1"]
        if "x2" in names:
            return ["x2"]
        if names:
            return ["a"]
        return ["out"]
    if kind == "C_B_wedge_B":
        return ["dot"] if "dot" in names else ["any"]
    if kind == "D_vee":
        return _vee_roles(d, match, k, names)
    if kind in ("D_circle_wedge_square", "D_circle_wedge_slash",
                "D_circle_wedge_revslash"):
        if k in (match.roles["b1"], match.roles["b2"]):
            return ["bullet"]
        if "q1" in names or "q2" in names:
            if kind == "D_circle_wedge_square":
                return ["q1" if "q1" in names else "q2"]
            return ["q"]
        if any(r.startswith("x") for r in names):
            return ["x"]
        if any(r.startswith("a") for r in names):
            return ["interior"]
        return ["out"]
    if kind in ("D_square_wedge_square", "D_slash_wedge_slash"):
        if "dot" in names:
            return ["dot"]
        if any(r.startswith("x") for r in names):
            return ["x"]
        if names:
            return ["a"]
        return ["out"]
    if kind == "D_boxtimes":
        if "x1" in names:
            return ["x"]
        if names:
            return ["a"]
        return ["out"]
    raise ValueError(kind)


def _attach_sets(match: FamilyMatch) -> tuple[set[int], set[int]]:
    kind = match.family.kind
    r1 = {r: v for r, v in match.roles.items()
          if not r.startswith("p.") and r != "z"}
    r2 = {r[2:]: v for r, v in match.roles.items() if r.startswith("p.")}
    if kind == "C_comma":
        return {r1["x"]}, {r2["x"]}
    s1 = {v for r, v in r1.items() if r.startswith("x")}
    if kind == "B_comma":
        return s1, {r2["x"]}
    return s1, {v for r, v in r2.items() if r.startswith("x")}


def _comma_roles(d: Diagram, match: FamilyMatch, k: int) -> list[str]:
    kind = match.family.kind
    if match.width != 0:
        return ["any"]
    xs1, xs2 = _attach_sets(match)
    if kind == "C_comma":
        x1, x2 = next(iter(xs1)), next(iter(xs2))
        if k in d.und[x1] and k in d.und[x2]:
            return ["dot"]
        return ["any"]
    nb = set(d.und[k])
    if k in xs1 and (nb & xs2 or k in xs2):
        return ["att"]
    if kind == "D_comma" and k in xs2 and nb & xs1:
        return ["att"]
    return ["any"]


def _vee_roles(d, match, k, names) -> list[str]:
    s1, n1, s2, n2 = _aligned(match)
    cc = s1 == "circle" and s2 == "circle"
    if k == match.roles["dot"]:
        return ["dot"]
    if not cc:
        return ["side"]
    roles = match.roles
    junc1 = {roles["a1"], roles["a3"]}
    junc2 = {roles["x1"], roles["x2"]}
    if k in junc1:
        return ["junction1"]
    if k in junc2:
        return ["junction2"]
    ring1 = {roles[f"a{i}"] for i in range(1, n1 + 1)}
    ring2 = ({roles["x1"], roles["a2"], roles["x2"]}
             | {roles[f"p.a{j}"] for j in range(4, n2 + 1)})
    if k in ring1:
        return ["cc_ring1"]
    if k in ring2:
        return ["cc_ring2"]
    x1pos = {v for r, v in roles.items()
             if r.startswith("x") and r not in ("x1", "x2")}
    x2pos = {v for r, v in roles.items() if r.startswith("p.x")}
    out = []
    if k in x1pos:
        out.append("cc_x1")
    if k in x2pos:
        out.append("cc_x2")
    return out or ["cc_out"]


# --------------------------------------------------------------------------
# per-side sub-diagrams and star successors


def _side_role_map(match: FamilyMatch, prefix: str) -> dict[str, int]:
    out = {}
    for r, v in match.roles.items():
        if prefix:
            if r.startswith(prefix):
                out[r[len(prefix):]] = v
        elif not r.startswith("p.") and r != "z":
            out[r] = v
    return out


def _side_part(d: Diagram, match: FamilyMatch, idx: int) -> Optional[set[int]]:
    kind = match.family.kind
    if kind in ("B_comma", "D_comma"):
        side = match.split.side1 if idx == 1 else match.split.side2
        return set(side.vertices)
    # joined at the shared vertex: the half is the component of the diagram
    # minus the other half's core, keeping the shared vertex itself
    s1, n1, s2, n2 = _aligned(match)
    other_star = s2 if idx == 1 else s1
    other_prefix = "p." if idx == 1 else ""
    other_n = n2 if idx == 1 else n1
    dot = match.roles["dot"]
    other_roles = _side_role_map(match, other_prefix)
    core = {other_roles[r] for r in star_core_roles(other_star, other_n)
            if r in other_roles and other_roles[r] != dot}
    for comp in d.components(exclude=frozenset(core)):
        if dot in comp:
            return set(comp)
    return None


def _side_infos(d: Diagram, match: FamilyMatch, k: int
                ) -> list[tuple[set[Star], Optional[Star]]]:
    """(successor stars of the mutated half, the other half's star)."""
    kind = match.family.kind
    s1, n1, s2, n2 = _aligned(match)
    if kind == "B_comma":
        sides = [(s1, n1, "", 1, None)]
    else:
        sides = [(s1, n1, "", 1, (s2, n2)), (s2, n2, "p.", 2, (s1, n1))]
    infos: list[tuple[set[Star], Optional[Star]]] = []
    for star, nn, prefix, idx, other in sides:
        part = _side_part(d, match, idx)
        if part is None or k not in part:
            continue
        sub, old2new = d.induced(sorted(part))
        roles = {r: old2new[v]
                 for r, v in _side_role_map(match, prefix).items()
                 if v in old2new}
        infos.append((_dstar_successors(sub, star, nn, roles, old2new[k]),
                      other))
    if not infos:
        # the mutated vertex touches neither star half: stars unchanged
        infos.append(({(s1, n1)}, (s2, n2) if kind != "B_comma" else None))
    return infos


def _dstar_successors(sub: Diagram, star: str, nn: Optional[int],
                      roles: dict[str, int], k: int) -> set[Star]:
    """Single-mutation transitions of one plain D-family half."""
    names = [r for r, v in roles.items() if v == k]
    is_x = any(r.startswith("x") for r in names)
    is_a = any(r.startswith("a") for r in names)
    if not (is_x or is_a):
        return {(star, nn)}
    ctx = {"d": sub, "roles": roles, "k": k}
    if star == "circle":
        if is_x:
            return {("circle", nn + 1)}
        if nn > 3:
            return {("circle", nn - 1)}
        if _opposite_x_present(sub, roles, k):
            return {("square", None)}
        return {("perp", None)}
    if star == "square":
        if sub.n == 4:
            # a bare 4-cycle half has no attachments to pin the reading;
            # the mutated half can be read as a diagonal square or as a
            # triangle with one attached vertex
            return {("slash", None), ("circle", 3)}
        if is_a:
            return {("slash", None)}
        return {("circle", 3)}
    if star == "slash":
        if is_a:
            return {("square", None)}
        other = "x2" if "x1" in names else "x1"
        if eval_guard(("exists_tree_nbr", "nonlinear", other), ctx):
            return {("slash", None)}
        return {("perp", None)}
    if star == "perp":
        if is_a:
            return {("perp", None)}
        if eval_guard(("exists_nbr_both", "linear", "a1", "a2", False), ctx):
            return {("slash", None)}
        if sub.deg(k) == 3 and eval_guard(
                ("exists_nbr_both", "nonlinear", "a1", "a2", True), ctx):
            return {("perp", None)}
        return {("circle", 3)}
    raise ValueError(star)


# --------------------------------------------------------------------------
# rule interpretation


def _match_ctx(d: Diagram, match: FamilyMatch, k: int) -> dict:
    s1, n1, s2, n2 = _aligned(match)
    cn = n1 if s1 == "circle" else (n2 if s2 == "circle" else None)
    if match.family.kind not in ("B_comma", "C_comma", "D_comma", "D_vee"):
        n1, n2 = match.family.n, match.family.m
        cn = n1
    return {"d": d, "match": match, "k": k, "roles": dict(match.roles),
            "n": n1, "m": n2, "cn": cn, "stars": (s1, s2),
            "width": match.width}


def _att_ctx(ctx, match, k) -> None:
    """Names used by attachment-vertex guards: the mutated half's frame."""
    d = ctx["d"]
    s1, n1, s2, n2 = _aligned(match)
    xs1, xs2 = _attach_sets(match)
    if k in xs1:
        mine, other, prefix, others = (s1, n1), (s2, n2), "", xs2
    else:
        mine, other, prefix, others = (s2, n2), (s1, n1), "p.", xs1
    ctx["mine_star"] = mine
    ctx["other_star"] = other if other[0] is not None else ("B", None)
    cand = [v for v in others if v in d.und[k]]
    if cand:
        ctx["roles"]["other_att"] = cand[0]
    side_roles = _side_role_map(match, prefix)
    for xr in ("x1", "x2"):
        if side_roles.get(xr) not in (None, k):
            ctx["roles"]["other_x"] = side_roles[xr]
    for ar in ("a1", "a2"):
        if ar in side_roles:
            ctx["roles"][ar] = side_roles[ar]


def _dot_ctx(ctx, match) -> None:
    s1, n1, s2, n2 = _aligned(match)
    if match.family.kind == "C_comma":
        xs1, xs2 = _attach_sets(match)
        ctx["roles"]["att1"] = next(iter(xs1))
        ctx["roles"]["att2"] = next(iter(xs2))
        return
    if "perp" in (s1, s2):
        prefix = "p." if s2 == "perp" else ""
        side_roles = _side_role_map(match, prefix)
        ctx["roles"]["other.a1"] = side_roles["a1"]
        ctx["roles"]["other.a2"] = side_roles["a2"]


def _star_values(e, ctx, info) -> list[Star]:
    if e[0] == "lit":
        return [(e[1], _nexpr(e[2], ctx))]
    if e[0] == "succ":
        return sorted(info[0])
    if e[0] == "other":
        if info is None:
            return [ctx["other_star"]]
        return [info[1]]
    if e[0] == "othergrown":
        base = ctx["other_star"] if info is None else info[1]
        return [_grow(base)]
    if e[0] == "mine":
        s, sz = ctx["mine_star"]
        return [(s, sz + e[1]) if s == "circle" else (s, sz)]
    raise ValueError(e)


def _needs_info(t) -> bool:
    return any(isinstance(x, tuple) and x[0] in ("succ", "other",
                                                 "othergrown")
               for x in t[1:])


def _expand(t, ctx) -> list[TargetPattern]:
    if t[0] == "same":
        fid = ctx["match"].family
        if fid.stars:
            return [TargetPattern(fid.kind,
                                  stars=_star_multiset(_fid_stars(fid)))]
        return [TargetPattern(fid.kind, n=fid.n)]
    if t[0] == "fam":
        return [TargetPattern(t[1], n=_nexpr(t[2], ctx))]
    if t[0] == "ccomma":
        return [TargetPattern("C_comma", stars=frozenset(),
                              widths=_widths(t[1], ctx))]
    if t[0] == "bcomma":
        widths = _widths(t[2], ctx)
        infos = ctx["side_infos"] if _needs_info(t) else [None]
        out = []
        for info in infos:
            for s in _star_values(t[1], ctx, info):
                out.append(TargetPattern("B_comma",
                                         stars=_star_multiset([s]),
                                         widths=widths))
        return out
    if t[0] in ("comma", "vee"):
        kind = "D_comma" if t[0] == "comma" else "D_vee"
        widths = _widths(t[3], ctx) if t[0] == "comma" else None
        infos = (ctx["side_infos"] if _needs_info(t)
                 and "mine_star" not in ctx else [None])
        out = []
        for info in infos:
            for a in _star_values(t[1], ctx, info):
                for b in _star_values(t[2], ctx, info):
                    out.append(TargetPattern(kind,
                                             stars=_star_multiset([a, b]),
                                             widths=widths))
        return out
    raise ValueError(t)


def transition_targets(d: Diagram, k: int,
                       matches: Optional[list[FamilyMatch]] = None
                       ) -> tuple[list[TargetPattern], list[str]]:
    """All successor patterns one mutation at ``k`` may produce.

    Unions the applicable rules over every family match of ``d``, so an
    embedding-ambiguous diagram is allowed any successor consistent with one
    of its readings.  Raises :class:`UncoveredCase` when some match has a
    vertex role with no applicable rule.
    """
    if matches is None:
        matches = list(iter_all_matches(d))
    if not matches:
        raise UncoveredCase(None, "unrecognized")
    patterns: list[TargetPattern] = []
    used: list[str] = []
    for match in matches:
        for role in _role_class(d, match, k):
            ctx = _match_ctx(d, match, k)
            if role == "att":
                _att_ctx(ctx, match, k)
            if role == "dot":
                _dot_ctx(ctx, match)
            group = _RULES_BY_KEY.get((match.family.kind, role))
            if not group:
                raise UncoveredCase(match.family, role)
            fired = False
            for rule in group:
                if not eval_guard(rule.guard, ctx):
                    continue
                if (any(_needs_info(t) for t in rule.targets)
                        and "side_infos" not in ctx
                        and "mine_star" not in ctx):
                    ctx["side_infos"] = _side_infos(d, match, k)
                for t in rule.targets:
                    patterns.extend(_expand(t, ctx))
                used.append(rule.rule_id)
                fired = True
                break
            if not fired:
                raise UncoveredCase(match.family, role)
    return patterns, used
