"""Linking numbers between arrowheads and the other vertices of a splice
diagram, vertex valences, and the per-node multipliers of the norm formulas.

The linking number of arrowhead ``j`` with a node or leaf ``i`` is the
product of the signs of the nodes on the tree path from ``j`` to ``i``
(both ends included) times the product of the weights at those nodes on
edges that leave the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import Kind, SpliceDiagram
from .errors import DiagramError

__all__ = ["LinkingMatrix", "linking_number", "linking_matrix"]


def linking_number(d: SpliceDiagram, j: str, i: str) -> int:
    kind = d.kind
    if j not in kind or kind[j].kind is not Kind.ARROW:
        raise DiagramError(f"{j!r} is not an arrowhead")
    if i not in kind:
        raise DiagramError(f"unknown vertex {i!r}")
    if kind[i].kind is Kind.ARROW:
        raise DiagramError("linking numbers between two arrowheads are not supported")

    on_path = d.path(j, i)
    path_edges = set(on_path)
    visited = [j]
    for k in on_path:
        visited.append(d.edges[k].other(visited[-1]))

    value = 1
    for v in visited:
        if kind[v].kind is not Kind.NODE:
            continue
        value *= kind[v].sign
        for k in d.incident[v]:
            if k not in path_edges:
                value *= d.edges[k].weight_at(v)
    return value


@dataclass(frozen=True)
class LinkingMatrix:
    """Linking numbers, rows = arrowheads, columns = nodes then leaves."""

    arrows: tuple[str, ...]
    columns: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    valence: dict[str, int]
    # delta~ - 2 = valence - 2 - sum(1/alpha) over attached leaves, per node
    node_multiplier: dict[str, Fraction]

    def column(self, v: str) -> tuple[int, ...]:
        c = self.columns.index(v)
        return tuple(row[c] for row in self.entries)

    def __getitem__(self, key: tuple[str, str]) -> int:
        j, i = key
        return self.entries[self.arrows.index(j)][self.columns.index(i)]

    @property
    def nodes(self) -> tuple[str, ...]:
        return tuple(self.node_multiplier)


def _linking_rows(d: SpliceDiagram) -> dict[str, dict[str, int]]:
    """All arrow-to-vertex linking numbers by one walk per arrowhead.

    The product is accumulated edge by edge, so this is an independent
    route to :func:`linking_number` (which recomputes each path).
    """
    kind = d.kind
    rows = {}
    for j in d.arrows:
        row: dict[str, int] = {}
        (k0,) = d.incident[j]
        # stack entries: (vertex, edge we arrived by, product so far excluding vertex)
        stack = [(d.edges[k0].other(j), k0, 1)]
        while stack:
            v, came, acc = stack.pop()
            vk = kind[v]
            if vk.kind is not Kind.NODE:
                row[v] = acc
                continue
            others = [k for k in d.incident[v] if k != came]
            full = acc * vk.sign
            for k in others:
                full *= d.edges[k].weight_at(v)
            row[v] = full
            for k in others:
                # the outgoing edge lies on the onward path, so skip its weight
                onward = acc * vk.sign
                for k2 in others:
                    if k2 != k:
                        onward *= d.edges[k2].weight_at(v)
                stack.append((d.edges[k].other(v), k, onward))
        rows[j] = row
    return rows


@lru_cache(maxsize=256)
def linking_matrix(d: SpliceDiagram) -> LinkingMatrix:
    rows = _linking_rows(d)
    columns = d.nodes + d.leaves
    entries = tuple(tuple(rows[j][i] for i in columns) for j in d.arrows)
    valence = {v: d.degree(v) for v in columns}
    mult = {}
    for n in d.nodes:
        m = Fraction(valence[n] - 2)
        for _, a in d.attached_leaves(n):
            if a == 0:
                raise DiagramError(f"leaf on node {n} has weight 0")
            m -= Fraction(1, a)
        mult[n] = m
    return LinkingMatrix(d.arrows, columns, entries, valence, mult)
