import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from splicenorm.fibration import (characteristic_hyperplanes, classify_facets, is_fibered,
                                  is_fibered_all_vertices)
from splicenorm.geometry import essential_basis
from splicenorm.linking import linking_matrix

from conftest import diagrams


def test_len_hyperplanes(len_diagram):
    hs = characteristic_hyperplanes(len_diagram)
    assert [(h.node, h.normal, h.reduced) for h in hs] == [
        ("n1", (15, -20, -20), (3, -4)),
        ("n2", (-10, -6, -6), (5, 3)),
    ]


def test_len_fibered_classes(len_diagram):
    assert is_fibered(len_diagram, (1, 0, 0))
    assert not is_fibered(len_diagram, (4, 3, 0))     # 3*4 - 4*3 = 0
    assert not is_fibered(len_diagram, (3, -5, 0))    # 5*3 + 3*(-5) = 0
    assert not is_fibered(len_diagram, (0, 1, -1))    # both pairings vanish
    assert is_fibered(len_diagram, (0, 1, 1))


def test_len_facets(len_diagram):
    rep = classify_facets(len_diagram)
    assert len(rep.facets) == 4 and rep.all_fibered
    on = sorted(i for inc in rep.incidences for i in inc.vertices_on)
    assert on == [0, 1, 2, 3]
    assert all(inc.facets_crossed == () for inc in rep.incidences)
    red = essential_basis(len_diagram)
    for f in rep.facets:
        assert red.reduce_class(f.lifted) == f.centroid


def test_trefoil_facets(trefoil_diagram):
    rep = classify_facets(trefoil_diagram)
    assert [f.vertices for f in rep.facets] == [((-1,),), ((1,),)]
    assert rep.all_fibered


def classes_on_hyperplanes(d, rng, count):
    """Integral classes orthogonal to some node column."""
    lm = linking_matrix(d)
    out = []
    for _ in range(count):
        col = lm.column(rng.choice(d.nodes))
        i, j = rng.sample(range(d.r), 2)
        phi = [0] * d.r
        phi[i], phi[j] = col[j], -col[i]
        for k in range(d.r):
            if k not in (i, j) and col[k] == 0:
                phi[k] = rng.randint(-5, 5)
        out.append(tuple(phi))
    return out


@settings(max_examples=60, deadline=None)
@given(d=diagrams(max_nodes=4, min_r=2), seed=st.integers(0, 10 ** 6))
def test_node_only_criterion(d, seed):
    rng = random.Random(seed)
    classes = classes_on_hyperplanes(d, rng, 10)
    classes += [tuple(rng.randint(-6, 6) for _ in range(d.r)) for _ in range(10)]
    for phi in classes:
        assert is_fibered(d, phi, check=False) == is_fibered_all_vertices(d, phi)


@settings(max_examples=40, deadline=None)
@given(diagrams(max_nodes=4))
def test_facets_fibered(d):
    if essential_basis(d).b_e > 3:
        return
    rep = classify_facets(d)
    assert rep.all_fibered
    assert all(inc.facets_crossed == () for inc in rep.incidences)
    for f in rep.facets:
        assert all(isinstance(x, Fraction) for x in f.lifted)
