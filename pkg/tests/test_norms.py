import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from splicenorm.errors import DiagramError
from splicenorm.norms import (alexander_norm, alexander_norm_by_nodes, alexander_norm_by_width,
                              fiber_genus, norm_report, thurston_norm,
                              thurston_norm_all_vertices, thurston_norm_by_nodes)

from conftest import diagrams


def len_formula(phi):
    a, b, c = phi
    return 4 * abs(3 * a - 4 * (b + c)) + 3 * abs(5 * a + 3 * (b + c))


def test_len_closed_form(len_diagram):
    rng = random.Random(1)
    for _ in range(300):
        phi = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(3))
        t = thurston_norm(len_diagram, phi)
        assert t == len_formula(phi)
        assert alexander_norm(len_diagram, phi) == t


def test_len_report(len_diagram):
    rep = norm_report(len_diagram, (1, 0, 0))
    assert (rep.thurston, rep.alexander, rep.coincide, rep.fibered) == (27, 27, True, True)
    assert [c.contribution for c in rep.per_node] == [12, 15]
    assert rep.knot_offset is None
    js = rep.to_json()
    assert js["thurston"] == "27" and js["phi"] == ["1", "0", "0"]


def test_trefoil(trefoil_diagram):
    d = trefoil_diagram
    assert thurston_norm(d, (1,)) == 1
    assert alexander_norm(d, (1,)) == 2
    for k in range(-7, 8):
        assert alexander_norm(d, (k,)) - thurston_norm(d, (k,)) == abs(k)
    rep = norm_report(d, (-3,))
    assert rep.knot_offset == 3 and rep.coincide
    g = fiber_genus(d, (1,))
    assert (g.divisor, g.genus, g.is_surface) == (1, 1, True)


def test_fiber_genus_len(len_diagram):
    g = fiber_genus(len_diagram, (1, 0, 0))
    # 27 = 2g + 3 - 2
    assert g.genus == 13 and g.is_surface
    g = fiber_genus(len_diagram, (2, 0, 0))
    assert g.divisor == 2 and g.genus == 13
    with pytest.raises(ValueError):
        fiber_genus(len_diagram, (0, 0, 0))
    with pytest.raises(ValueError):
        fiber_genus(len_diagram, (Fraction(1, 2), 0, 0))


def test_wrong_length(len_diagram):
    with pytest.raises(DiagramError, match="3 components"):
        thurston_norm(len_diagram, (1, 2))


def test_scaling_and_symmetry(len_diagram):
    phi = (Fraction(2, 3), -1, 4)
    t = thurston_norm(len_diagram, phi)
    assert thurston_norm(len_diagram, tuple(-x for x in phi)) == t
    assert thurston_norm(len_diagram, tuple(5 * x for x in phi)) == 5 * t


@settings(max_examples=60, deadline=None)
@given(d=diagrams(max_nodes=3, min_r=2), data=st.data())
def test_coincidence(d, data):
    phi = data.draw(st.tuples(*[st.integers(-12, 12)] * d.r))
    assert alexander_norm_by_width(d, phi) == thurston_norm_all_vertices(d, phi)


@settings(max_examples=60, deadline=None)
@given(d=diagrams(max_nodes=3), data=st.data())
def test_decompositions(d, data):
    q = st.fractions(-9, 9, max_denominator=6)
    phi = data.draw(st.tuples(*[q] * d.r))
    assert thurston_norm_all_vertices(d, phi) == thurston_norm_by_nodes(d, phi)
    assert alexander_norm_by_width(d, phi) == alexander_norm_by_nodes(d, phi)
    # triangle inequality
    psi = data.draw(st.tuples(*[q] * d.r))
    s = tuple(a + b for a, b in zip(phi, psi))
    assert thurston_norm(d, s) <= thurston_norm(d, phi) + thurston_norm(d, psi)
