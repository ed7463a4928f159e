import pytest
from fractions import Fraction
from hypothesis import given, settings

from splicenorm.errors import DiagramError
from splicenorm.linking import _linking_rows, linking_matrix, linking_number

from conftest import diagrams


def test_len_columns(len_diagram):
    lm = linking_matrix(len_diagram)
    assert lm.column("n1") == (15, -20, -20)
    assert lm.column("n2") == (-10, -6, -6)
    assert lm.column("b1") == (3, -4, -4)
    assert lm.column("b2") == (-5, -3, -3)
    assert lm.node_multiplier == {"n1": Fraction(4, 5), "n2": Fraction(3, 2)}
    assert lm.valence == {"n1": 3, "n2": 4, "b1": 1, "b2": 1}


def test_single_entries(len_diagram):
    # a1 to b2 crosses both nodes: (+1)(5) * (-1)(1*1) = -5
    assert linking_number(len_diagram, "a1", "b2") == -5
    assert linking_number(len_diagram, "a2", "n2") == -6
    with pytest.raises(DiagramError):
        linking_number(len_diagram, "a1", "a2")


def test_trefoil(trefoil_diagram):
    lm = linking_matrix(trefoil_diagram)
    assert lm.column("n") == (6,)
    assert lm.node_multiplier["n"] == Fraction(1, 6)


@settings(max_examples=80, deadline=None)
@given(diagrams(max_nodes=4))
def test_two_routes_agree(d):
    rows = _linking_rows(d)
    lm = linking_matrix(d)
    for j in d.arrows:
        for i in lm.columns:
            assert rows[j][i] == linking_number(d, j, i) == lm[j, i]
