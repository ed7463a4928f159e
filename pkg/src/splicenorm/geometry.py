"""Exact rational convex geometry for Newton polytopes and norm balls.

Everything here works over :class:`fractions.Fraction`.  Hulls are computed
in an affine frame of the point set: in dimension <= 2 by hand, above that
with cddlib in exact rational mode.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import cdd

from . import lattice
from .diagram import SpliceDiagram
from .errors import GeometryError, InvariantViolation
from .linking import linking_matrix

__all__ = [
    "Polytope",
    "EssentialReduction",
    "convex_hull",
    "minkowski_sum",
    "scale",
    "translate",
    "canonical_translate",
    "segment",
    "zonotope",
    "zonotope_newton",
    "width",
    "facets",
    "polygon_cycle",
    "essential_basis",
    "reduced_generators",
    "reduced_norm",
    "unit_ball",
]

Point = tuple[Fraction, ...]


def _pt(p) -> Point:
    return tuple(Fraction(x) for x in p)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Polytope:
    """Convex polytope given by its vertices (sorted, no redundant points).

    ``generators`` is set for zonotopes built by :func:`zonotope`: pairs
    ``(scalar, integer vector)`` whose segments ``[0, scalar * vector]`` sum to
    the polytope (up to the recorded translation).
    """

    dim: int
    vertices: tuple[Point, ...]
    generators: tuple[tuple[Fraction, tuple[int, ...]], ...] | None = field(
        default=None, compare=False)

    def __post_init__(self):
        for v in self.vertices:
            if len(v) != self.dim:
                raise GeometryError(f"vertex {v} does not have dimension {self.dim}")
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    def __len__(self):
        return len(self.vertices)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def integer_vertices(self) -> set[tuple[int, ...]]:
        if not self.is_integral():
            raise GeometryError("polytope has non-integral vertices")
        return {tuple(int(x) for x in v) for v in self.vertices}

    def affine_dimension(self) -> int:
        return len(_affine_frame(self.vertices)[1])

    def contains(self, x) -> bool:
        """Exact membership test (via the facet description)."""
        x = _pt(x)
        base, piv, _ = _affine_frame(self.vertices)
        if not _in_affine_hull(x, self.vertices, base, piv):
            return False
        return all(b + dot(a, [x[i] for i in piv]) >= 0
                   for a, b in _facet_inequalities(self.vertices, piv))


# --------------------------------------------------------------------------
# hulls

def _affine_frame(points: Sequence[Point]) -> tuple[Point, list[int], list[int]]:
    """Base point, pivot coordinates on which the projection of the affine
    hull is injective, and indices of points spanning that hull."""
    base = points[0]
    pivots: list[int] = []
    spanning = [0]
    # Gaussian elimination over Q, recording pivot columns
    basis: list[list[Fraction]] = []
    for idx in range(1, len(points)):
        if len(basis) == len(base):
            break
        r = [a - b for a, b in zip(points[idx], base)]
        for b, c in zip(basis, pivots):
            if r[c]:
                f = r[c] / b[c]
                r = [x - f * y for x, y in zip(r, b)]
        nz = next((i for i, x in enumerate(r) if x), None)
        if nz is not None:
            basis.append(r)
            pivots.append(nz)
            spanning.append(idx)
    return base, sorted(pivots), spanning


def _in_affine_hull(x, points, base, piv) -> bool:
    if len(piv) == len(base):
        return True
    return _affine_frame(list(points) + [x])[1] == piv


def _hull_2d(pts: list[tuple[Fraction, Fraction]]) -> list[int]:
    """Indices of hull vertices in counter-clockwise order (monotone chain)."""
    order = sorted(range(len(pts)), key=lambda i: pts[i])

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(idx):
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def _cdd_generators(pts):
    m = cdd.Matrix([[1, *p] for p in pts], number_type="fraction")
    m.rep_type = cdd.RepType.GENERATOR
    return m


def _integer_scaled(pts: list[Point]) -> list[tuple[int, ...]]:
    """Scale by a common denominator; hull structure is unchanged."""
    den = 1
    for p in pts:
        for x in p:
            den = den * x.denominator // math.gcd(den, x.denominator)
    return [tuple(int(x * den) for x in p) for p in pts]


def _cdd_inequalities(pts) -> list[tuple[tuple[int, ...], int]]:
    """Integer facet inequalities ``b + a.x >= 0`` of a full-dimensional hull."""
    out = []
    for row in cdd.Polyhedron(_cdd_generators(pts)).get_inequalities():
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        row = [int(x * den) for x in row]
        out.append((tuple(row[1:]), row[0]))
    return out


def _hull_indices_cdd(pts: list[tuple[int, ...]], frame: list[int]) -> list[int]:
    """Hull of a full-dimensional point set in dimension >= 3.

    Redundancy removal over all points is one LP per point, so instead grow
    a candidate set: start from extreme points, compute the candidates'
    facets, add the most violating point of every violated facet, repeat.
    Only the final (small) candidate set is canonicalized.
    """
    k = len(pts[0])
    rng = random.Random(0)
    dirs = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    dirs += [tuple(-x for x in d) for d in dirs]
    dirs += [tuple(rng.randint(-9, 9) for _ in range(k)) for _ in range(8 * k)]
    cand = set(frame)
    for dvec in dirs:
        cand.add(max(range(len(pts)), key=lambda i: (dot(dvec, pts[i]), pts[i])))
    while True:
        order = sorted(cand)
        added = False
        for a, b in _cdd_inequalities([pts[i] for i in order]):
            vals = [(b + dot(a, p), i) for i, p in enumerate(pts)]
            low, i = min(vals)
            if low < 0 and i not in cand:
                cand.add(i)
                added = True
        if not added:
            break
    order = sorted(cand)
    m = _cdd_generators([pts[i] for i in order])
    _, redundant = m.canonicalize()
    return [order[j] for j in range(len(order)) if j not in redundant]


def _hull_indices(proj: list[Point], frame: list[int]) -> list[int]:
    k = len(proj[0]) if proj else 0
    if k == 0:
        return [0]
    if k == 1:
        lo = min(range(len(proj)), key=lambda i: proj[i])
        hi = max(range(len(proj)), key=lambda i: proj[i])
        return [lo, hi]
    if k == 2:
        return _hull_2d(proj)
    return _hull_indices_cdd(_integer_scaled(proj), frame)


def convex_hull(points: Iterable, dim: int | None = None) -> Polytope:
    pts = sorted({_pt(p) for p in points})
    if not pts:
        raise GeometryError("convex hull of an empty set")
    if dim is None:
        dim = len(pts[0])
    base, piv, spanning = _affine_frame(pts)
    proj = [tuple(p[i] for i in piv) for p in pts]
    keep = _hull_indices(proj, spanning)
    return Polytope(dim, tuple(sorted(pts[i] for i in keep)))


def _facet_inequalities(vertices, piv):
    """Facet inequalities ``b + a.x >= 0`` in the pivot coordinates."""
    proj = [tuple(v[i] for i in piv) for v in vertices]
    k = len(piv)
    if k == 0:
        return []
    if k == 1:
        lo, hi = min(p[0] for p in proj), max(p[0] for p in proj)
        return [((Fraction(1),), -lo), ((Fraction(-1),), hi)]
    if k == 2:
        cyc = _hull_2d(proj)
        out = []
        for s in range(len(cyc)):
            p, q = proj[cyc[s]], proj[cyc[(s + 1) % len(cyc)]]
            a = (p[1] - q[1], q[0] - p[0])  # inward normal for a CCW cycle
            out.append((a, -dot(a, p)))
        return out
    poly = cdd.Polyhedron(_cdd_generators(proj))
    ineq = poly.get_inequalities()
    out = []
    for row in ineq:
        row = [Fraction(x) for x in row]
        out.append((tuple(row[1:]), row[0]))
    return out


def facets(P: Polytope) -> list[tuple[int, ...]]:
    """Facets of ``P`` (relative to its affine hull) as sorted tuples of
    vertex indices into ``P.vertices``."""
    base, piv, _ = _affine_frame(P.vertices)
    if not piv:
        return []
    out = []
    for a, b in _facet_inequalities(P.vertices, piv):
        on = tuple(i for i, v in enumerate(P.vertices)
                   if b + dot(a, [v[j] for j in piv]) == 0)
        out.append(on)
    return sorted(set(out))


def polygon_cycle(P: Polytope) -> list[Point]:
    """Vertices of a 2-dimensional polytope in counter-clockwise order."""
    base, piv, _ = _affine_frame(P.vertices)
    if len(piv) != 2:
        raise GeometryError("polygon_cycle needs a 2-dimensional polytope")
    proj = [tuple(v[i] for i in piv) for v in P.vertices]
    return [P.vertices[i] for i in _hull_2d(proj)]


# --------------------------------------------------------------------------
# Minkowski arithmetic

def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.dim != Q.dim:
        raise GeometryError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    return convex_hull((tuple(a + b for a, b in zip(u, v))
                        for u in P.vertices for v in Q.vertices), P.dim)


def scale(P: Polytope, lam) -> Polytope:
    lam = Fraction(lam)
    return Polytope(P.dim, tuple(sorted(tuple(lam * x for x in v) for v in P.vertices)))


def translate(P: Polytope, t) -> Polytope:
    t = _pt(t)
    return Polytope(P.dim, tuple(sorted(tuple(a + b for a, b in zip(v, t))
                                        for v in P.vertices)), P.generators)


def canonical_translate(P: Polytope) -> Polytope:
    """Translate so that the minimum of every coordinate is 0."""
    lo = [min(col) for col in zip(*P.vertices)]
    return translate(P, [-x for x in lo])


def segment(a, b=None) -> Polytope:
    """Segment ``[0, a]``, or ``[a, b]`` when two endpoints are given."""
    if b is None:
        b, a = a, [0] * len(a)
    return convex_hull([a, b], len(a))


def zonotope(generators, dim: int) -> Polytope:
    """Minkowski sum of segments ``[0, c * g]`` for ``(c, g)`` in generators.

    Summed one segment at a time with redundancy removal after each step,
    which visits far fewer points than all endpoint combinations.
    """
    gens = tuple((Fraction(c), tuple(int(x) for x in g)) for c, g in generators)
    P = Polytope(dim, ((Fraction(0),) * dim,))
    for c, g in gens:
        step = tuple(c * x for x in g)
        P = convex_hull([v for u in P.vertices
                         for v in (u, tuple(a + b for a, b in zip(u, step)))], dim)
    return Polytope(dim, P.vertices, gens)


def width(P: Polytope, phi) -> Fraction:
    """max - min of the linear functional ``phi`` over ``P``."""
    phi = _pt(phi)
    if len(phi) != P.dim:
        raise GeometryError(f"class has length {len(phi)}, polytope dimension {P.dim}")
    vals = [dot(phi, v) for v in P.vertices]
    return max(vals) - min(vals)


def newton_generators(d: SpliceDiagram) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Segments whose Minkowski sum is the Newton polytope of the Alexander
    polynomial: one per node, scaled by its multiplier, plus ``[0, 1]`` for
    a knot's extra ``(t - 1)`` factor."""
    lm = linking_matrix(d)
    gens = [(lm.node_multiplier[n], lm.column(n)) for n in d.nodes]
    if d.r == 1:
        gens.append((Fraction(1), (1,)))
    return gens


@lru_cache(maxsize=256)
def zonotope_newton(d: SpliceDiagram) -> Polytope:
    Z = canonical_translate(zonotope(newton_generators(d), d.r))
    if not Z.is_integral():
        raise GeometryError(
            f"zonotope of {d.name} has non-integral vertices {Z.vertices}")
    return Z


# --------------------------------------------------------------------------
# essential coordinates

@dataclass(frozen=True)
class EssentialReduction:
    """Unimodular change of exponent coordinates.

    ``forward`` maps exponent vectors so the node directions span the first
    ``b_e`` coordinates; ``class_map = forward^{-T}`` acts on cohomology
    classes and preserves the pairing.
    """

    b_e: int
    forward: tuple[tuple[int, ...], ...]
    class_map: tuple[tuple[int, ...], ...]

    @property
    def b_1(self) -> int:
        return len(self.forward)

    def exponent(self, v) -> tuple:
        return tuple(lattice.matvec(self.forward, v))

    def essential(self, v) -> tuple:
        return self.exponent(v)[: self.b_e]

    def reduce_class(self, phi) -> tuple:
        return tuple(lattice.matvec(self.class_map, phi))[: self.b_e]

    def lift_class(self, phi_tilde) -> tuple:
        """A full class reducing to ``phi_tilde`` (non-essential part zero)."""
        full = list(phi_tilde) + [0] * (self.b_1 - self.b_e)
        return tuple(lattice.matvec(lattice.transpose([list(r) for r in self.forward]), full))

    def project(self, P: Polytope) -> Polytope:
        """Image of ``P`` in essential coordinates.

        The non-essential coordinates must be constant on ``P``.
        """
        imgs = [self.exponent(v) for v in P.vertices]
        tails = {img[self.b_e:] for img in imgs}
        if len(tails) != 1:
            raise GeometryError("polytope is not parallel to the essential subspace")
        return convex_hull([img[: self.b_e] for img in imgs], self.b_e)


def essential_basis_for(generators: Sequence[Sequence[int]], n: int) -> EssentialReduction:
    gens = [list(g) for g in generators if any(g)]
    if not gens:
        raise GeometryError("all node directions are zero")
    # columns = generators
    gmat = lattice.transpose(gens)
    b_e = lattice.rank(gmat)
    kernel = lattice.left_kernel(gmat)
    # prefer plain coordinate projections, as in the hand computation for L_EN
    fwd = lattice.coordinate_completion(kernel, n, b_e)
    if fwd is None:
        _, fwd, _ = lattice.row_hermite(gmat)
    if abs(lattice.det(fwd)) != 1:
        raise InvariantViolation("essential change of coordinates is not unimodular")
    cmap = lattice.transpose(lattice.inverse_unimodular(fwd))
    return EssentialReduction(b_e, tuple(map(tuple, fwd)), tuple(map(tuple, cmap)))


@lru_cache(maxsize=256)
def essential_basis(d: SpliceDiagram) -> EssentialReduction:
    lm = linking_matrix(d)
    return essential_basis_for([lm.column(v) for v in d.nodes], d.r)


def reduced_generators(d: SpliceDiagram) -> list[tuple[Fraction, tuple[int, ...]]]:
    """``(multiplier, node direction in essential coordinates)`` per node."""
    lm = linking_matrix(d)
    red = essential_basis(d)
    return [(lm.node_multiplier[n], red.essential(lm.column(n))) for n in d.nodes]


def reduced_norm(gens, phi_tilde) -> Fraction:
    return sum((c * abs(dot(w, phi_tilde)) for c, w in gens), Fraction(0))


def _normal(vectors: list[Sequence[int]], k: int) -> tuple[int, ...]:
    """Integer normal to k-1 vectors in Q^k (generalised cross product)."""
    out = []
    for i in range(k):
        minor = [[v[j] for j in range(k) if j != i] for v in vectors]
        out.append((-1) ** i * lattice.det(minor))
    return tuple(out)


MAX_BALL_DIM = 3


@lru_cache(maxsize=256)
def unit_ball(d: SpliceDiagram) -> Polytope:
    """Vertices of the reduced norm ball ``{sum c_i |<w_i, x>| <= 1}``.

    The ball is the polar of the centred zonotope ``sum c_i [-w_i, w_i]``;
    its vertices are ``n / h(n)`` for the facet normals ``n`` of that
    zonotope, which are the normals of hyperplanes spanned by ``b_e - 1``
    independent generators.
    """
    red = essential_basis(d)
    k = red.b_e
    if k > MAX_BALL_DIM:
        raise GeometryError(
            f"b_e = {k} > {MAX_BALL_DIM}: vertex enumeration unsupported "
            "(evaluation-only mode; norms can still be computed)")
    gens = [(c, w) for c, w in reduced_generators(d) if any(w)]
    dirs = sorted({lattice.primitive(w) for _, w in gens})
    normals = set()
    if k == 1:
        normals.add((1,))
    else:
        for sub in combinations(dirs, k - 1):
            n = _normal(list(sub), k)
            if any(n):
                normals.add(lattice.primitive(n))
    verts = []
    for n in sorted(normals):
        h = reduced_norm(gens, n)
        if h <= 0:
            raise InvariantViolation(f"norm vanishes on nonzero reduced class {n}")
        v = tuple(Fraction(x) / h for x in n)
        verts += [v, tuple(-x for x in v)]
    return Polytope(k, tuple(sorted(verts)))
