"""Fibred classes, characteristic hyperplanes and facets of the reduced
norm ball.

A class is fibred exactly when its pairing with every node's column of
linking numbers is nonzero; the zero sets of those pairings are the
characteristic hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .diagram import SpliceDiagram
from .errors import InvariantViolation
from .geometry import dot, essential_basis, facets, unit_ball
from .linking import linking_matrix
from .norms import as_class, pairing

__all__ = [
    "Hyperplane",
    "Facet",
    "HyperplaneIncidence",
    "FacetReport",
    "is_fibered",
    "is_fibered_all_vertices",
    "characteristic_hyperplanes",
    "classify_facets",
]


def is_fibered_all_vertices(d: SpliceDiagram, phi) -> bool:
    """The criterion over every node and leaf."""
    phi = as_class(phi, d.r)
    lm = linking_matrix(d)
    return all(pairing(phi, lm.column(v)) != 0 for v in lm.columns)


def is_fibered(d: SpliceDiagram, phi, *, check: bool = True) -> bool:
    phi = as_class(phi, d.r)
    lm = linking_matrix(d)
    fibered = all(pairing(phi, lm.column(n)) != 0 for n in d.nodes)
    if check and fibered != is_fibered_all_vertices(d, phi):
        raise InvariantViolation(f"node-only and full fibration criteria disagree at {phi}")
    return fibered


@dataclass(frozen=True)
class Hyperplane:
    """``{phi : <phi, normal> = 0}`` for one node.

    ``reduced`` is the primitive normal of the same hyperplane in essential
    coordinates (sign fixed so the first nonzero entry is positive).
    """

    node: str
    normal: tuple[int, ...]
    reduced: tuple[int, ...]

    def contains(self, phi) -> bool:
        return pairing(as_class(phi), self.normal) == 0

    def contains_reduced(self, phi_tilde) -> bool:
        return dot(self.reduced, phi_tilde) == 0


def characteristic_hyperplanes(d: SpliceDiagram) -> list[Hyperplane]:
    lm = linking_matrix(d)
    red = essential_basis(d)
    out = []
    for n in d.nodes:
        col = lm.column(n)
        out.append(Hyperplane(n, col, lattice.primitive(red.essential(col))))
    return out


@dataclass(frozen=True)
class Facet:
    vertices: tuple[tuple[Fraction, ...], ...]
    centroid: tuple[Fraction, ...]
    lifted: tuple[Fraction, ...]
    fibered: bool


@dataclass(frozen=True)
class HyperplaneIncidence:
    hyperplane: Hyperplane
    vertices_on: tuple[int, ...]
    facets_crossed: tuple[int, ...]


@dataclass(frozen=True)
class FacetReport:
    ball_vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[Facet, ...]
    incidences: tuple[HyperplaneIncidence, ...]

    @property
    def all_fibered(self) -> bool:
        return all(f.fibered for f in self.facets)

    def to_json(self) -> dict:
        s = lambda v: [str(x) for x in v]  # noqa: E731
        return {
            "vertices": [s(v) for v in self.ball_vertices],
            "facets": [{"vertices": [s(v) for v in f.vertices],
                        "centroid": s(f.centroid),
                        "lifted_class": s(f.lifted),
                        "fibered": f.fibered} for f in self.facets],
            "hyperplanes": [{"node": h.hyperplane.node,
                             "reduced_normal": list(h.hyperplane.reduced),
                             "vertices_on": list(h.vertices_on),
                             "facets_crossed": list(h.facets_crossed)}
                            for h in self.incidences],
        }


def classify_facets(d: SpliceDiagram) -> FacetReport:
    """Test every facet of the reduced ball at its vertex centroid."""
    ball = unit_ball(d)
    red = essential_basis(d)
    verts = ball.vertices
    out = []
    for idx in facets(ball):
        fv = tuple(verts[i] for i in idx)
        centroid = tuple(sum(c) / len(fv) for c in zip(*fv))
        lifted = tuple(Fraction(x) for x in red.lift_class(centroid))
        if tuple(red.reduce_class(lifted)) != centroid:
            raise InvariantViolation("lifted class does not reduce back to the centroid")
        out.append(Facet(fv, centroid, lifted, is_fibered(d, lifted)))

    incid = []
    for h in characteristic_hyperplanes(d):
        on = tuple(i for i, v in enumerate(verts) if dot(h.reduced, v) == 0)
        crossed = []
        for k, f in enumerate(out):
            sides = {(dot(h.reduced, v) > 0) - (dot(h.reduced, v) < 0) for v in f.vertices}
            # a facet lying inside the hyperplane, or split by it
            if sides == {0} or {1, -1} <= sides:
                crossed.append(k)
        incid.append(HyperplaneIncidence(h, on, tuple(crossed)))
        if crossed:
            raise InvariantViolation(
                f"hyperplane of node {h.node} meets the interior of facets {crossed}")
    return FacetReport(verts, tuple(out), tuple(incid))
