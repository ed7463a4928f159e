"""Thurston and Alexander norms of graph links.

Each norm has two independent evaluations:

* Thurston: the sum over all nodes and leaves of ``(valence - 2) |<phi, l_i>|``,
  and the nodes-only form with the multipliers ``valence - 2 - sum 1/alpha``.
* Alexander: the width of the Newton polytope of the expanded Alexander
  polynomial, and the sum over node segments (plus ``|phi|`` for knots).

With ``check=True`` both are computed and must agree exactly.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .alexander import alexander_polynomial
from .diagram import SpliceDiagram
from .errors import DiagramError, InvariantViolation
from .geometry import width
from .laurent import support_polytope
from .linking import linking_matrix

__all__ = [
    "as_class",
    "pairing",
    "NodeContribution",
    "NormReport",
    "FiberGenus",
    "thurston_norm",
    "thurston_norm_all_vertices",
    "thurston_norm_by_nodes",
    "alexander_norm",
    "alexander_norm_by_nodes",
    "alexander_norm_by_width",
    "newton_polytope",
    "norm_report",
    "fiber_genus",
]


def as_class(phi: Sequence, r: int | None = None) -> tuple[Fraction, ...]:
    """Coerce a cohomology class to a tuple of Fractions, checking its length."""
    out = tuple(Fraction(x) for x in phi)
    if r is not None and len(out) != r:
        raise DiagramError(f"class has {len(out)} coordinates, the link has {r} components")
    return out


def pairing(phi, col) -> Fraction:
    return sum((a * b for a, b in zip(phi, col)), Fraction(0))


def thurston_norm_all_vertices(d: SpliceDiagram, phi) -> Fraction:
    phi = as_class(phi, d.r)
    lm = linking_matrix(d)
    return sum(((lm.valence[v] - 2) * abs(pairing(phi, lm.column(v)))
                for v in lm.columns), Fraction(0))


def thurston_norm_by_nodes(d: SpliceDiagram, phi) -> Fraction:
    phi = as_class(phi, d.r)
    lm = linking_matrix(d)
    return sum((lm.node_multiplier[n] * abs(pairing(phi, lm.column(n)))
                for n in d.nodes), Fraction(0))


def thurston_norm(d: SpliceDiagram, phi, *, check: bool = True) -> Fraction:
    value = thurston_norm_by_nodes(d, phi)
    if check:
        other = thurston_norm_all_vertices(d, phi)
        if other != value:
            raise InvariantViolation(
                f"Thurston norm: node form {value} != all-vertex form {other}")
    return value


@functools.lru_cache(maxsize=256)
def newton_polytope(d: SpliceDiagram):
    return support_polytope(alexander_polynomial(d))


def alexander_norm_by_width(d: SpliceDiagram, phi) -> Fraction:
    return width(newton_polytope(d), as_class(phi, d.r))


def alexander_norm_by_nodes(d: SpliceDiagram, phi) -> Fraction:
    phi = as_class(phi, d.r)
    value = thurston_norm_by_nodes(d, phi)
    if d.r == 1:
        value += abs(phi[0])
    return value


def alexander_norm(d: SpliceDiagram, phi, *, check: bool = True) -> Fraction:
    if not check:
        return alexander_norm_by_nodes(d, phi)
    value = alexander_norm_by_width(d, phi)
    other = alexander_norm_by_nodes(d, phi)
    if value != other:
        raise InvariantViolation(
            f"Alexander norm: Newton width {value} != segment sum {other}")
    return value


@dataclass(frozen=True)
class NodeContribution:
    node: str
    multiplier: Fraction
    pairing: Fraction
    contribution: Fraction


@dataclass(frozen=True)
class NormReport:
    phi: tuple[Fraction, ...]
    per_node: tuple[NodeContribution, ...]
    thurston: Fraction
    alexander: Fraction
    fibered: bool
    coincide: bool
    knot_offset: Fraction | None = field(default=None)

    def to_json(self) -> dict:
        s = str
        return {
            "phi": [s(x) for x in self.phi],
            "per_node": [
                {"node": c.node, "multiplier": s(c.multiplier),
                 "pairing": s(c.pairing), "contribution": s(c.contribution)}
                for c in self.per_node],
            "thurston": s(self.thurston),
            "alexander": s(self.alexander),
            "fibered": self.fibered,
            "coincide": self.coincide,
            "knot_offset": None if self.knot_offset is None else s(self.knot_offset),
        }


def norm_report(d: SpliceDiagram, phi, *, check: bool = True) -> NormReport:
    from .fibration import is_fibered

    phi = as_class(phi, d.r)
    lm = linking_matrix(d)
    per_node = []
    for n in d.nodes:
        pr = pairing(phi, lm.column(n))
        m = lm.node_multiplier[n]
        per_node.append(NodeContribution(n, m, pr, m * abs(pr)))
    t = thurston_norm(d, phi, check=check)
    if t != sum((c.contribution for c in per_node), Fraction(0)):
        raise InvariantViolation("Thurston norm differs from the sum of node contributions")
    a = alexander_norm(d, phi, check=check)
    if d.r == 1:
        offset = a - t
        coincide = offset == abs(phi[0])
    else:
        offset = None
        coincide = a == t
    return NormReport(phi, tuple(per_node), t, a, is_fibered(d, phi, check=check),
                      coincide, offset)


@dataclass(frozen=True)
class FiberGenus:
    divisor: int
    genus: Fraction
    # False when the genus is not a nonnegative integer, i.e. the surface
    # model with r boundary circles does not fit this class
    is_surface: bool


def fiber_genus(d: SpliceDiagram, phi) -> FiberGenus:
    """Genus of each of the ``gcd(phi)`` parallel components of the surface
    dual to an integral class, from ``||phi||_T = gcd * (2g + r - 2)``."""
    phi = as_class(phi, d.r)
    if any(x.denominator != 1 for x in phi):
        raise ValueError("fiber_genus needs an integral class")
    g_cd = 0
    for x in phi:
        g_cd = math.gcd(g_cd, int(x))
    if g_cd == 0:
        raise ValueError("fiber_genus is undefined for the zero class")
    t = thurston_norm(d, phi)
    genus = (t / g_cd - d.r + 2) / 2
    return FiberGenus(g_cd, genus, genus.denominator == 1 and genus >= 0)
