"""Splice diagrams of graph links: data model, ``.spl`` I/O, validation,
splicing and a seeded random generator.

A splice diagram is a finite tree with three kinds of vertices:

* arrowheads, one per link component (degree 1);
* nodes, one per Seifert piece, carrying an orientation sign (degree >= 3);
* leaves, the exceptional fibres that are not link components (degree 1).

Each edge carries an integer weight at every end that is a node.  The order
in which arrowheads are declared fixes the variables ``t1 ... tr``.
"""

from __future__ import annotations

import enum
import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Iterable, Mapping

from .errors import DiagramError, ParseError

__all__ = [
    "Kind",
    "Vertex",
    "Edge",
    "SpliceDiagram",
    "ValidationReport",
    "parse_diagram",
    "format_diagram",
    "load_diagram",
    "validate",
    "splice",
    "random_diagram",
    "seifert_diagram",
    "l_en",
    "trefoil",
]


class Kind(enum.Enum):
    ARROW = "arrow"
    NODE = "node"
    LEAF = "leaf"


@dataclass(frozen=True)
class Vertex:
    kind: Kind
    sign: int | None = None

    @property
    def is_node(self) -> bool:
        return self.kind is Kind.NODE


ARROW = Vertex(Kind.ARROW)
LEAF = Vertex(Kind.LEAF)


def node(sign: int) -> Vertex:
    return Vertex(Kind.NODE, sign)


@dataclass(frozen=True)
class Edge:
    """An edge ``u -- v``; ``wu``/``wv`` are the weights at the ``u``/``v`` ends
    (``None`` at a non-node end)."""

    u: str
    v: str
    wu: int | None = None
    wv: int | None = None

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise KeyError(x)

    def weight_at(self, x: str) -> int | None:
        if x == self.u:
            return self.wu
        if x == self.v:
            return self.wv
        raise KeyError(x)


@dataclass(frozen=True, eq=False)
class SpliceDiagram:
    """Immutable splice diagram.

    ``vertices`` keeps declaration order (used when printing); equality and
    hashing ignore that order and the name, but respect edge order and the
    arrowhead order, which defines the polynomial variables.
    """

    vertices: tuple[tuple[str, Vertex], ...]
    edges: tuple[Edge, ...]
    arrows: tuple[str, ...]
    name: str = field(default="graphlink")

    @classmethod
    def build(
        cls,
        vertices: Mapping[str, Vertex] | Iterable[tuple[str, Vertex]],
        edges: Iterable[Edge | tuple],
        arrows: Iterable[str] | None = None,
        name: str = "graphlink",
    ) -> "SpliceDiagram":
        items = tuple(vertices.items() if isinstance(vertices, Mapping) else vertices)
        ids = [v for v, _ in items]
        if len(set(ids)) != len(ids):
            raise DiagramError("duplicate vertex id")
        kinds = dict(items)
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        for e in es:
            for x in (e.u, e.v):
                if x not in kinds:
                    raise DiagramError(f"edge refers to unknown vertex {x!r}")
        if arrows is None:
            arrows = [v for v, k in items if k.kind is Kind.ARROW]
        return cls(items, es, tuple(arrows), name)

    def _key(self):
        return (frozenset(self.vertices), self.edges, self.arrows)

    def __eq__(self, other):
        if not isinstance(other, SpliceDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"SpliceDiagram({self.name!r}, r={self.r}, p={self.p}, q={self.q})"
        )

    @cached_property
    def kind(self) -> dict[str, Vertex]:
        return dict(self.vertices)

    @cached_property
    def nodes(self) -> tuple[str, ...]:
        return tuple(v for v, k in self.vertices if k.kind is Kind.NODE)

    @cached_property
    def leaves(self) -> tuple[str, ...]:
        return tuple(v for v, k in self.vertices if k.kind is Kind.LEAF)

    @property
    def r(self) -> int:
        return len(self.arrows)

    @property
    def p(self) -> int:
        return len(self.nodes)

    @property
    def q(self) -> int:
        return len(self.leaves)

    @cached_property
    def incident(self) -> dict[str, tuple[int, ...]]:
        """vertex id -> indices of incident edges."""
        inc: dict[str, list[int]] = {v: [] for v, _ in self.vertices}
        for k, e in enumerate(self.edges):
            inc[e.u].append(k)
            if e.v != e.u:
                inc[e.v].append(k)
        return {v: tuple(ks) for v, ks in inc.items()}

    def degree(self, v: str) -> int:
        return len(self.incident[v])

    def sign(self, v: str) -> int:
        return self.kind[v].sign

    def neighbours(self, v: str) -> list[str]:
        return [self.edges[k].other(v) for k in self.incident[v]]

    def weights_at(self, n: str) -> list[int]:
        """Weights on all edge ends at node ``n``."""
        return [self.edges[k].weight_at(n) for k in self.incident[n]]

    def attached_leaves(self, n: str) -> list[tuple[str, int]]:
        """(leaf id, weight at n) for the leaves hanging off node ``n``."""
        out = []
        for k in self.incident[n]:
            e = self.edges[k]
            w = e.other(n)
            if self.kind[w].kind is Kind.LEAF:
                out.append((w, e.weight_at(n)))
        return out

    def path(self, a: str, b: str) -> list[int]:
        """Edge indices of the unique path from ``a`` to ``b``."""
        prev: dict[str, int | None] = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for k in self.incident[x]:
                y = self.edges[k].other(x)
                if y not in prev:
                    prev[y] = k
                    queue.append(y)
        if b not in prev:
            raise DiagramError(f"no path from {a!r} to {b!r}")
        out = []
        x = b
        while prev[x] is not None:
            k = prev[x]
            out.append(k)
            x = self.edges[k].other(x)
        out.reverse()
        return out


# --------------------------------------------------------------------------
# .spl format

def parse_diagram(text: str, *, check: bool = True) -> SpliceDiagram:
    """Parse the line-based ``.spl`` format.

    With ``check`` (the default) structural violations found by
    :func:`validate` are raised as :class:`DiagramError`.
    """
    name = "graphlink"
    vertices: list[tuple[str, Vertex]] = []
    seen: dict[str, Vertex] = {}
    edges: list[Edge] = []
    header = False

    def weight(tok: str, vid: str, lineno: int) -> int | None:
        is_node = seen[vid].kind is Kind.NODE
        if tok == "-":
            if is_node:
                raise ParseError(f"missing weight at node end {vid!r}", lineno)
            return None
        if not is_node:
            raise ParseError(f"weight given on non-node end {vid!r}", lineno)
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"bad weight {tok!r}", lineno) from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        cmd, args = tok[0], tok[1:]
        if cmd == "graphlink":
            if header or len(args) != 1:
                raise ParseError("expected a single 'graphlink <name>' header", lineno)
            header = True
            name = args[0]
        elif cmd in ("node", "arrow", "leaf"):
            want = 2 if cmd == "node" else 1
            if len(args) != want:
                raise ParseError(f"'{cmd}' takes {want} argument(s)", lineno)
            vid = args[0]
            if vid in seen:
                raise ParseError(f"duplicate id {vid!r}", lineno)
            if cmd == "node":
                if args[1] not in ("+", "-"):
                    raise ParseError(f"node sign must be + or -, got {args[1]!r}", lineno)
                vx = node(1 if args[1] == "+" else -1)
            else:
                vx = ARROW if cmd == "arrow" else LEAF
            seen[vid] = vx
            vertices.append((vid, vx))
        elif cmd == "edge":
            if len(args) != 4:
                raise ParseError("'edge' takes 4 arguments", lineno)
            a, b, sa, sb = args
            for x in (a, b):
                if x not in seen:
                    raise ParseError(f"unknown vertex id {x!r} in edge", lineno)
            edges.append(Edge(a, b, weight(sa, a, lineno), weight(sb, b, lineno)))
        else:
            raise ParseError(f"unknown directive {cmd!r}", lineno)

    d = SpliceDiagram.build(vertices, edges, name=name)
    if check:
        report = validate(d)
        if report.errors:
            raise DiagramError("; ".join(report.errors))
    return d


def format_diagram(d: SpliceDiagram) -> str:
    lines = [f"graphlink {d.name}"]
    for v in d.nodes:
        lines.append(f"node {v} {'+' if d.sign(v) > 0 else '-'}")
    for v in d.arrows:
        lines.append(f"arrow {v}")
    for v in d.leaves:
        lines.append(f"leaf {v}")

    def w(x):
        return "-" if x is None else str(x)

    for e in d.edges:
        lines.append(f"edge {e.u} {e.v} {w(e.wu)} {w(e.wv)}")
    return "\n".join(lines) + "\n"


def load_diagram(path) -> SpliceDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _bundled(name: str) -> SpliceDiagram:
    text = resources.files("splicenorm.data").joinpath(name).read_text("utf-8")
    return parse_diagram(text)


def l_en() -> SpliceDiagram:
    """The two-node, three-component sample link from Eisenbud and Neumann."""
    return _bundled("l_en.spl")


def trefoil() -> SpliceDiagram:
    return _bundled("trefoil.spl")


# --------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def validate(d: SpliceDiagram) -> ValidationReport:
    rep = ValidationReport()
    err, warn = rep.errors.append, rep.warnings.append
    kind = d.kind

    n_vert = len(d.vertices)
    connected = False
    if n_vert:
        start = d.vertices[0][0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in d.neighbours(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        connected = len(seen) == n_vert
    if not connected or len(d.edges) != n_vert - 1:
        err("not a tree")

    for v, k in d.vertices:
        deg = d.degree(v)
        if k.kind is Kind.NODE:
            if k.sign not in (1, -1):
                err(f"node {v}: sign must be +1 or -1")
            if deg < 3:
                err(f"node {v}: node degree < 3")
        elif deg != 1:
            err(f"{k.kind.value} {v}: degree {deg} != 1")

    for e in d.edges:
        for x, wx in ((e.u, e.wu), (e.v, e.wv)):
            if kind[x].kind is Kind.NODE:
                if wx is None:
                    err(f"edge {e.u}-{e.v}: missing weight at node {x}")
                elif wx < 0:
                    err(f"edge {e.u}-{e.v}: negative weight {wx} at node {x}")
            elif wx is not None:
                err(f"edge {e.u}-{e.v}: weight on non-node end {x}")

    arrows = set(d.arrows)
    if len(arrows) != len(d.arrows):
        err("arrowhead listed twice in arrow order")
    if arrows != {v for v, k in d.vertices if k.kind is Kind.ARROW}:
        err("arrow order does not list exactly the arrowheads")
    if not d.arrows:
        err("no arrowheads (r = 0)")
    if not d.nodes:
        err("no nodes")
    if rep.errors:
        return rep

    for n in d.nodes:
        for leaf, a in d.attached_leaves(n):
            if a == 1:
                warn(f"leaf {leaf}: weight 1 is a nonsingular fiber")
            elif a == 0:
                warn(f"leaf {leaf}: weight 0 at node {n}")
        ws = d.weights_at(n)
        bad = [(a, b) for a, b in combinations(ws, 2) if math.gcd(a, b) != 1]
        if bad:
            warn(f"node {n}: weights {sorted(ws)} are not pairwise coprime")
    return rep


# --------------------------------------------------------------------------
# splicing

def _fresh(ids: set[str], base: str) -> str:
    cand = base
    k = 2
    while cand in ids:
        cand = f"{base}_{k}"
        k += 1
    return cand


def splice(d1: SpliceDiagram, a1: str, d2: SpliceDiagram, a2: str,
           name: str | None = None) -> SpliceDiagram:
    """Splice ``d1`` and ``d2`` along arrowheads ``a1`` and ``a2``.

    Both arrowheads are deleted and their neighbouring nodes joined by a new
    edge that keeps, at each end, the weight the deleted arrow edge had there.
    Vertex ids of ``d2`` that clash with ``d1`` are renamed.
    """
    for d, a in ((d1, a1), (d2, a2)):
        if a not in d.kind or d.kind[a].kind is not Kind.ARROW:
            raise DiagramError(f"{a!r} is not an arrowhead")
    if d1.r + d2.r - 2 < 1:
        raise DiagramError("splice would leave no arrowheads")

    ids1 = {v for v, _ in d1.vertices}
    rename: dict[str, str] = {}
    taken = set(ids1)
    for v, _ in d2.vertices:
        new = _fresh(taken, v)
        rename[v] = new
        taken.add(new)

    (k1,) = d1.incident[a1]
    (k2,) = d2.incident[a2]
    e1, e2 = d1.edges[k1], d2.edges[k2]
    n1, w1 = e1.other(a1), e1.weight_at(e1.other(a1))
    n2, w2 = e2.other(a2), e2.weight_at(e2.other(a2))
    joined = Edge(n1, rename[n2], w1, w2)

    vertices = [(v, k) for v, k in d1.vertices if v != a1]
    vertices += [(rename[v], k) for v, k in d2.vertices if v != a2]
    edges = [joined if k == k1 else e for k, e in enumerate(d1.edges)]
    edges += [Edge(rename[e.u], rename[e.v], e.wu, e.wv)
              for k, e in enumerate(d2.edges) if k != k2]
    arrows = [a for a in d1.arrows if a != a1]
    arrows += [rename[a] for a in d2.arrows if a != a2]
    return SpliceDiagram.build(vertices, edges, arrows,
                               name or f"{d1.name}+{d2.name}")


# --------------------------------------------------------------------------
# generation

def seifert_diagram(sign: int, arrow_weights, leaf_weights, name="seifert",
                    prefix="") -> SpliceDiagram:
    """Single-node diagram: arrows and leaves on fibres of the given weights."""
    c = f"{prefix}n"
    vertices = [(c, node(sign))]
    edges = []
    for i, w in enumerate(arrow_weights, 1):
        vertices.append((f"{prefix}a{i}", ARROW))
        edges.append(Edge(c, f"{prefix}a{i}", w, None))
    for i, w in enumerate(leaf_weights, 1):
        vertices.append((f"{prefix}b{i}", LEAF))
        edges.append(Edge(c, f"{prefix}b{i}", w, None))
    return SpliceDiagram.build(vertices, edges, name=name)


def _coprime_weights(rng: random.Random, n_arrows: int, n_leaves: int,
                     bound: int) -> tuple[list[int], list[int]] | None:
    chosen: list[int] = []

    def draw(lo: int) -> int | None:
        pool = [w for w in range(lo, bound + 1)
                if w == 1 or all(math.gcd(w, c) == 1 for c in chosen)]
        if not pool:
            return None
        w = rng.choice(pool)
        chosen.append(w)
        return w

    leaves = [draw(2) for _ in range(n_leaves)]
    arrows = [draw(1) for _ in range(n_arrows)]
    if None in leaves or None in arrows:
        return None
    return arrows, leaves


def random_diagram(seed: int, max_nodes: int = 3, max_degree: int = 4,
                   weight_bound: int = 5, *, retries: int = 100) -> SpliceDiagram:
    """Seeded random graph link: 1..max_nodes Seifert pieces spliced together.

    Weights around each node are pairwise coprime, leaves get weight >= 2 and
    the result always has at least one arrowhead.
    """
    if max_nodes < 1 or weight_bound < 1 or max_degree < 3:
        raise ValueError("need max_nodes >= 1, weight_bound >= 1, max_degree >= 3")
    rng = random.Random(seed)
    for _ in range(retries):
        k = rng.randint(1, max_nodes)
        d: SpliceDiagram | None = None
        for piece in range(k):
            deg = rng.randint(3, max_degree)
            r_now = d.r if d is not None else 0
            # after splicing r_now + a - 2 arrows remain; keep at least one
            lo = 1 if d is None else max(1, 3 - r_now)
            if lo > deg:
                break
            n_arrows = rng.randint(lo, deg)
            ws = _coprime_weights(rng, n_arrows, deg - n_arrows, weight_bound)
            if ws is None:
                break
            s = seifert_diagram(rng.choice((1, -1)), *ws, prefix=f"p{piece}")
            if d is None:
                d = s
            else:
                d = splice(d, rng.choice(d.arrows), s, rng.choice(s.arrows))
        else:
            d = SpliceDiagram.build(d.vertices, d.edges, d.arrows,
                                    name=f"random_{seed}")
            if validate(d).ok:
                return d
    raise RuntimeError(f"random_diagram: no valid diagram after {retries} tries")
