"""Differential checks of the norm identities on a single diagram, and a
seeded corpus runner used by ``splicenorm verify``.

Every check returns a list of human-readable failure messages; an empty
list means the diagram passed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import SpliceDiagram, random_diagram
from .errors import GeometryError, InvariantViolation
from .fibration import (characteristic_hyperplanes, classify_facets, is_fibered,
                        is_fibered_all_vertices)
from .geometry import (MAX_BALL_DIM, essential_basis, reduced_generators,
                       reduced_norm, unit_ball, zonotope_newton)
from .linking import linking_matrix
from .norms import (alexander_norm_by_width, newton_polytope,
                    pairing, thurston_norm_all_vertices, thurston_norm_by_nodes)

# the expanded polynomial grows quickly with the number of nodes
MAX_EXPANSION_NODES = 6


def random_classes(rng: random.Random, r: int, count: int, bound: int = 10):
    return [tuple(rng.randint(-bound, bound) for _ in range(r)) for _ in range(count)]


def check_structure(d: SpliceDiagram) -> list[str]:
    """Leaf/node divisibility of linking numbers and positive node multipliers."""
    lm = linking_matrix(d)
    out = []
    for n in d.nodes:
        if lm.node_multiplier[n] <= 0 and all(a >= 2 for _, a in d.attached_leaves(n)):
            out.append(f"node {n}: multiplier {lm.node_multiplier[n]} <= 0")
        for leaf, a in d.attached_leaves(n):
            for j in d.arrows:
                if a * lm[j, leaf] != lm[j, n]:
                    out.append(f"{a} * l({j},{leaf}) != l({j},{n})")
    return out


def check_thurston_decomposition(d: SpliceDiagram, classes) -> list[str]:
    out = []
    for phi in classes:
        a, b = thurston_norm_all_vertices(d, phi), thurston_norm_by_nodes(d, phi)
        if a != b:
            out.append(f"phi={phi}: all-vertex form {a} != node form {b}")
    return out


def check_coincidence(d: SpliceDiagram, classes) -> list[str]:
    """Alexander norm from the polynomial against the Thurston norm."""
    out = []
    for phi in classes:
        a = alexander_norm_by_width(d, phi)
        t = thurston_norm_all_vertices(d, phi)
        if d.r >= 2 and a != t:
            out.append(f"phi={phi}: Alexander {a} != Thurston {t}")
        if d.r == 1 and a - t != abs(phi[0]):
            out.append(f"phi={phi}: Alexander - Thurston = {a - t} != |phi|")
        if a.denominator != 1 or t.denominator != 1:
            out.append(f"phi={phi}: non-integral norm on integral class")
    return out


def check_zonotope(d: SpliceDiagram) -> list[str]:
    P, Z = newton_polytope(d), zonotope_newton(d)
    if P != Z:
        return [f"Newton polytope {P.vertices} != zonotope {Z.vertices}"]
    return []


def check_fibration(d: SpliceDiagram, classes) -> list[str]:
    out = []
    lm = linking_matrix(d)
    red = essential_basis(d)
    hyps = characteristic_hyperplanes(d)
    for phi in classes:
        nodes_only = is_fibered(d, phi, check=False)
        if nodes_only != is_fibered_all_vertices(d, phi):
            out.append(f"phi={phi}: node-only and full fibration criteria disagree")
        for h in hyps:
            on = h.contains(phi)
            m = lm.node_multiplier[h.node]
            if on != (m * abs(pairing(phi, lm.column(h.node))) == 0):
                out.append(f"phi={phi}: hyperplane {h.node} vs zero contribution")
        reduced = red.reduce_class(phi)
        on_reduced = any(h.contains_reduced(reduced) for h in hyps)
        if on_reduced == nodes_only:
            out.append(f"phi={phi}: reduced hyperplanes disagree with the criterion")
    return out


def check_ball(d: SpliceDiagram) -> list[str]:
    """Vertices on the unit sphere, symmetry, and the facet theorem."""
    if essential_basis(d).b_e > MAX_BALL_DIM:
        return []
    out = []
    ball = unit_ball(d)
    gens = reduced_generators(d)
    verts = set(ball.vertices)
    eps = Fraction(1, 1000)
    for v in ball.vertices:
        if reduced_norm(gens, v) != 1:
            out.append(f"ball vertex {v} has norm {reduced_norm(gens, v)}")
        if tuple(-x for x in v) not in verts:
            out.append(f"ball vertex {v} has no antipode")
        if reduced_norm(gens, [(1 + eps) * x for x in v]) <= 1:
            out.append(f"scaled vertex {v} still inside the ball")
    try:
        report = classify_facets(d)
    except InvariantViolation as exc:
        return out + [str(exc)]
    for f in report.facets:
        mid = f.centroid
        if reduced_norm(gens, mid) != 1:
            out.append(f"facet centroid {mid} is off the unit sphere")
        if not f.fibered:
            out.append(f"facet {f.vertices} is not fibered")
    return out


def check_diagram(d: SpliceDiagram, rng: random.Random, n_classes: int = 100) -> list[str]:
    classes = random_classes(rng, d.r, n_classes)
    out = check_structure(d)
    out += check_thurston_decomposition(d, classes)
    out += check_fibration(d, classes)
    if d.p <= MAX_EXPANSION_NODES:
        out += check_zonotope(d)
        out += check_coincidence(d, classes)
    try:
        out += check_ball(d)
    except GeometryError as exc:
        out.append(str(exc))
    return out


@dataclass
class CorpusResult:
    checked: int = 0
    failures: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def trial_seed(seed: int, i: int) -> int:
    return seed * 1_000_003 + i


def run_corpus(count: int, seed: int, *, max_nodes: int = 3, max_degree: int = 4,
               weight_bound: int = 5, n_classes: int = 100) -> CorpusResult:
    res = CorpusResult()
    for i in range(count):
        s = trial_seed(seed, i)
        d = random_diagram(s, max_nodes, max_degree, weight_bound)
        fails = check_diagram(d, random.Random(s), n_classes)
        res.checked += 1
        if fails:
            res.failures[f"seed {s}"] = fails
    return res


__all__ = [
    "random_classes",
    "check_structure",
    "check_thurston_decomposition",
    "check_coincidence",
    "check_zonotope",
    "check_fibration",
    "check_ball",
    "check_diagram",
    "CorpusResult",
    "run_corpus",
    "trial_seed",
]
