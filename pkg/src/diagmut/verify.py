"""Verification suites.

* :func:`check_closure` — mutate every sampled diagram at every vertex and
  assert the successor's family lies in the transition-rule targets, with
  the recorded width bounds.
* :func:`shrink_cycle` — the cycle-shrinking mutation sequence that turns a
  cyclically oriented simply-laced cycle with one attached diagram into a
  fork shape joined to the attachment by a single arc.
* :func:`classify_by_enumeration` — classification by exhaustively
  enumerating the mutation class and scanning for a reference shape.
* :func:`run_classification_check` — enumerate a seed's class and assert every
  member classifies to the seed's type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .canon import canonical_key, canonical_key_undirected
from .diagram import Diagram
from .orbit import DEFAULT_MAX_MEMBERS, DEFAULT_MAX_STEPS, enumerate_class
from .recognize import classify, iter_all_matches
from .seeds import MIN_RANK, TYPES, dynkin_seed
from .transitions import UncoveredCase, transition_targets


@dataclass
class VerificationReport:
    """Outcome of one verification suite; empty failures means pass."""

    suite: str
    diagrams: int = 0
    mutations: int = 0
    failures: list = field(default_factory=list)
    rules_used: set = field(default_factory=set)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "pass" if self.passed else f"FAIL ({len(self.failures)})"
        return (f"{self.suite}: {state}, {self.diagrams} diagrams, "
                f"{self.mutations} mutations, {len(self.rules_used)} rules")


def _observed(d: Diagram) -> list[tuple]:
    """Distinct (family id, width) pairs among the matches of ``d``."""
    out = []
    for m in iter_all_matches(d):
        pair = (m.family, m.width)
        if pair not in out:
            out.append(pair)
    return out


def check_closure(samples: Iterable[Diagram],
                  suite: str = "closure") -> VerificationReport:
    """Closure of the sampled diagrams under single mutations.

    For each diagram and vertex, the mutated diagram's observed families
    must all be accepted by some transition-rule target pattern (including
    its width constraint).  Vertex roles without an applicable rule are
    reported as failures, which keeps the rule tables honest about their
    coverage.
    """
    report = VerificationReport(suite)
    cache: dict[bytes, list[tuple]] = {}
    for d in samples:
        report.diagrams += 1
        matches = list(iter_all_matches(d))
        if not matches:
            report.failures.append((d, None, "recognized sample", "no match"))
            continue
        cache.setdefault(canonical_key(d), [(m.family, m.width)
                                            for m in matches])
        for k in range(d.n):
            report.mutations += 1
            succ = d.mutate(k)
            skey = canonical_key(succ)
            if skey not in cache:
                cache[skey] = _observed(succ)
            observed = cache[skey]
            try:
                patterns, used = transition_targets(d, k, matches)
            except UncoveredCase as exc:
                report.failures.append((d, k, f"uncovered:{exc.fid.kind}"
                                        f"/{exc.role}", observed))
                continue
            report.rules_used.update(used)
            fids = {fid for fid, _ in observed}
            for fid in fids:
                widths = [w for f, w in observed if f == fid]
                if not any(p.accepts(fid, w)
                           for p in patterns for w in widths):
                    report.failures.append((d, k, patterns, observed))
                    break
    return report


# --------------------------------------------------------------------------
# the cycle-shrinking sequence


def _fork_shape(n: int) -> Diagram:
    if n >= 4:
        return dynkin_seed("D", n)
    if n == 3:
        return Diagram(3, [(0, 1, 1), (1, 2, 1)])
    raise ValueError("n must be at least 3")


def shrink_cycle(n: int, attachment: Diagram, y: int
                 ) -> tuple[Diagram, list[int]]:
    """Shrink an attached oriented ``n``-cycle to a fork by mutations.

    Builds the disjoint union of ``attachment`` and a cyclically oriented
    simply-laced ``n``-cycle ``c_1 -> c_n -> c_{n-1} -> ... -> c_1``, adds
    the arcs ``y -> c_1`` and ``c_n -> y`` of weight one, and applies the
    mutation sequence ``c_1, c_2, ..., c_{n-2}``.  Returns the resulting diagram and
    the sequence (cycle vertices are indexed after the attachment's).
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if attachment.n < 1:
        raise ValueError("attachment must contain the joining vertex")
    if not 0 <= y < attachment.n:
        raise ValueError("y is not a vertex of the attachment")
    if not attachment.is_connected():
        raise ValueError("attachment must be connected")
    a = attachment.n
    arcs = list(attachment.arcs)
    # directed cycle c_1 -> c_n -> c_{n-1} -> ... -> c_2 -> c_1, so that
    # the triangle {y, c_1, c_n} is itself directed
    arcs += [(a + i + 1, a + i, 1) for i in range(n - 1)]
    arcs += [(a, a + n - 1, 1), (y, a, 1), (a + n - 1, y, 1)]
    d = Diagram(a + n, arcs)
    seq = [a + i for i in range(n - 2)]
    return d.mutate_seq(seq), seq


def check_shrink_cycle(n: int, attachment: Diagram, y: int) -> list[str]:
    """Postcondition violations of :func:`shrink_cycle` (empty = pass)."""
    result, _ = shrink_cycle(n, attachment, y)
    a = attachment.n
    cyc = list(range(a, a + n))
    problems = []
    part, _ = result.induced(cyc)
    if canonical_key_undirected(part) != canonical_key_undirected(
            _fork_shape(n)):
        problems.append("cycle part is not a fork shape")
    crossing = [(t, h, w) for t, h, w in result.arcs
                if (t in cyc) != (h in cyc)]
    if crossing != [(a, y, 1)] and crossing != [(min(a, y), max(a, y), 1)]:
        if len(crossing) != 1 or crossing[0][2] != 1 or \
                crossing[0][0] != a or crossing[0][1] != y:
            problems.append(f"connecting arcs are {crossing}, "
                            f"expected only {(a, y, 1)}")
    joined = result.induced([y] + cyc)[0]
    if any(w != 1 for _, _, w in joined.arcs):
        problems.append("joined part is not simply laced")
    return problems


# --------------------------------------------------------------------------
# classification by exhaustive enumeration


def _shape_keys(nverts: int) -> dict[bytes, str]:
    out = {}
    for t in TYPES:
        rank = nverts if t in ("A", "B", "D") else nverts - 1
        if rank < MIN_RANK[t]:
            continue
        out[canonical_key_undirected(dynkin_seed(t, rank))] = t
    return out


def classify_by_enumeration(d: Diagram,
                            max_members: int = DEFAULT_MAX_MEMBERS,
                            max_steps: int = DEFAULT_MAX_STEPS
                            ) -> Optional[str]:
    """Mutation type of ``d`` found by scanning its whole mutation class.

    Returns the type of the first member whose underlying weighted graph is
    a reference shape, ``"Unknown"`` when the class is exhausted without a
    hit, and None when the enumeration limits were reached first.
    """
    shapes = _shape_keys(d.n)
    cs = enumerate_class(d, max_members=max_members, max_steps=max_steps)
    for member in cs.members.values():
        t = shapes.get(canonical_key_undirected(member))
        if t is not None:
            return t
    return "Unknown" if cs.exhausted else None


def run_classification_check(dynkin_type: str, rank: int,
                      max_members: int = DEFAULT_MAX_MEMBERS,
                      max_steps: int = DEFAULT_MAX_STEPS) -> VerificationReport:
    """Enumerate a seed's class; every member must classify to its type."""
    report = VerificationReport(f"classification:{dynkin_type}{rank}")
    cs = enumerate_class(dynkin_seed(dynkin_type, rank),
                         max_members=max_members, max_steps=max_steps)
    if not cs.exhausted:
        report.failures.append((cs.seed, None, "exhausted enumeration",
                                "limits reached"))
    for member in cs.members.values():
        report.diagrams += 1
        cls = classify(member)
        if cls is None or cls.dynkin_type != dynkin_type:
            report.failures.append((member, None, dynkin_type,
                                    None if cls is None else cls.dynkin_type))
    return report
