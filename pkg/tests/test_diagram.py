import pytest
from hypothesis import given, settings

from splicenorm.diagram import (Kind, format_diagram, parse_diagram, random_diagram,
                                seifert_diagram, splice, validate)
from splicenorm.errors import DiagramError, ParseError

from conftest import diagrams


PIECE_1 = """graphlink left
node n1 +
arrow a1
leaf b1
arrow s
edge n1 a1 2 -
edge n1 b1 5 -
edge n1 s 3 -
"""

PIECE_2 = """graphlink right
node n2 -
arrow a2
arrow a3
arrow s2
leaf b2
edge n2 a2 1 -
edge n2 a3 1 -
edge n2 s2 3 -
edge n2 b2 2 -
"""


def test_len_shape(len_diagram):
    d = len_diagram
    assert d.name == "l_en"
    assert d.arrows == ("a1", "a2", "a3")
    assert d.nodes == ("n1", "n2")
    assert d.leaves == ("b1", "b2")
    assert (d.r, d.p, d.q) == (3, 2, 2)
    assert d.sign("n1") == 1 and d.sign("n2") == -1
    assert sorted(d.weights_at("n2")) == [1, 1, 2, 3]
    assert d.attached_leaves("n1") == [("b1", 5)]


def test_splice_builds_len(len_diagram):
    d1 = parse_diagram(PIECE_1, check=False)
    d2 = parse_diagram(PIECE_2, check=False)
    d = splice(d1, "s", d2, "s2", name="l_en")
    assert d == len_diagram
    assert d.edges == len_diagram.edges
    assert validate(d).ok


def test_splice_renames_clashes():
    s = seifert_diagram(1, [2, 3], [5])
    d = splice(s, "a1", s, "a1")
    ids = [v for v, _ in d.vertices]
    assert len(ids) == len(set(ids))
    assert d.r == 2 and d.p == 2


def test_splice_errors():
    s = seifert_diagram(1, [2], [3, 5])
    with pytest.raises(DiagramError, match="no arrowheads"):
        splice(s, "a1", s, "a1")
    with pytest.raises(DiagramError, match="not an arrowhead"):
        splice(s, "b1", s, "a1")


def test_roundtrip(len_diagram, trefoil_diagram):
    for d in (len_diagram, trefoil_diagram):
        again = parse_diagram(format_diagram(d))
        assert again == d and again.name == d.name
        assert format_diagram(again) == format_diagram(d)


@settings(max_examples=60, deadline=None)
@given(diagrams())
def test_roundtrip_drawn(d):
    assert parse_diagram(format_diagram(d)) == d


@pytest.mark.parametrize("text, msg", [
    ("node n +\nnode n -\n", "duplicate id"),
    ("node n +\nedge n x 2 -\n", "unknown vertex id"),
    ("node n +\narrow a\nedge n a 2 3\n", "non-node end"),
    ("node n +\narrow a\nedge n a - -\n", "missing weight"),
    ("node n *\n", "sign"),
    ("frobnicate\n", "unknown directive"),
    ("node n +\narrow a\nedge n a x -\n", "bad weight"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg) as info:
        parse_diagram(text)
    assert info.value.lineno is not None


def test_validate_errors():
    d = parse_diagram("node n +\narrow a\nleaf b\nedge n a 2 -\nedge n b 3 -\n",
                      check=False)
    assert "node n: node degree < 3" in validate(d).errors
    with pytest.raises(DiagramError, match="node degree"):
        parse_diagram("node n +\narrow a\nleaf b\nedge n a 2 -\nedge n b 3 -\n")
    cyc = ("node n +\nnode m +\narrow a\nedge n m 1 1\nedge n m 2 2\n"
           "edge n a 3 -\nedge m a 1 -\n")
    assert "not a tree" in validate(parse_diagram(cyc, check=False)).errors
    no_arrow = "node n +\nleaf x\nleaf y\nleaf z\nedge n x 2 -\nedge n y 3 -\nedge n z 5 -\n"
    assert "no arrowheads (r = 0)" in validate(parse_diagram(no_arrow, check=False)).errors


def test_validate_warnings():
    d = seifert_diagram(1, [2, 4], [1])
    rep = validate(d)
    assert rep.ok
    assert any("nonsingular fiber" in w for w in rep.warnings)
    assert any("not pairwise coprime" in w for w in rep.warnings)


def test_random_diagram_deterministic():
    for seed in range(30):
        d = random_diagram(seed, 4)
        assert d == random_diagram(seed, 4)
        assert validate(d).ok
        assert d.r >= 1 and 1 <= d.p <= 4
        assert all(d.degree(n) >= 3 for n in d.nodes)
        assert all(d.kind[v].kind is Kind.LEAF for v in d.leaves)


def test_path(len_diagram):
    d = len_diagram
    path = d.path("a1", "b2")
    ends = [(d.edges[k].u, d.edges[k].v) for k in path]
    assert ends == [("n1", "a1"), ("n1", "n2"), ("n2", "b2")]
    assert d.path("n1", "n1") == []
