"""Graphviz DOT export.

Edges carry their weight as a label; weight-4 edges are drawn as double
arrows (two parallel edges via ``color="black:black"``), which is a
display convention only — the underlying data still has a single arc.
"""
from __future__ import annotations

from .diagram import Diagram


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: Diagram, name: str = "diagram") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for i in range(d.n):
        lines.append(f"  {_quote(d.labels[i])};")
    for t, h, w in sorted(d.arcs):
        attrs = []
        if w != 1:
            attrs.append(f"label={_quote(str(w))}")
        if w == 4:
            attrs.append('color="black:black"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(d.labels[t])} -> {_quote(d.labels[h])}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
