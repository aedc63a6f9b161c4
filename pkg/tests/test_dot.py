"""DOT export."""
from diagmut.diagram import Diagram
from diagmut.dot import to_dot


def test_vertices_edges_and_weight_labels():
    d = Diagram(3, [(0, 1, 2), (1, 2, 1)])
    out = to_dot(d)
    assert out.startswith("digraph")
    assert '"0" -> "1" [label="2"];' in out
    assert '"1" -> "2";' in out


def test_weight_four_renders_double_arrow():
    d = Diagram(2, [(0, 1, 4)])
    out = to_dot(d)
    assert 'label="4"' in out and 'color="black:black"' in out


def test_labels_are_quoted():
    d = Diagram(2, [(0, 1, 1)]).with_labels(['a"b', "c"])
    out = to_dot(d)
    assert '"a\\"b" -> "c";' in out
