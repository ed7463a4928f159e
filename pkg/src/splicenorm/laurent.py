"""Exact multivariate Laurent polynomials with integer coefficients.

Terms are stored as ``{exponent tuple: nonzero int}``.  Printing and the
division algorithm use graded lexicographic order (total degree first, then
lexicographic), so error messages and outputs are reproducible.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import NotDivisibleError

__all__ = ["LaurentPolynomial", "binomial", "monomial", "divide_exact",
           "canonicalize", "support_polytope", "grlex_key"]

# exponents are kept within signed 64-bit range
_EXP_LIMIT = 2 ** 63


def grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


def _check_exponent(e):
    for x in e:
        if not -_EXP_LIMIT < x < _EXP_LIMIT:
            raise OverflowError(f"exponent {x} exceeds 64-bit range")


class LaurentPolynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], int] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        for e in clean:
            _check_exponent(e)
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # -- construction helpers
    @classmethod
    def _raw(cls, nvars, terms: dict):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls._raw(nvars, {(0,) * nvars: 1})

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return MappingProxyType(self._terms)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, key=grlex_key)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- ring operations
    def _same(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def shift(self, e) -> "LaurentPolynomial":
        """Multiply by the monomial ``t^e``."""
        e = tuple(e)
        return LaurentPolynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(k, e)): c for k, c in self._terms.items()})

    def min_exponents(self) -> tuple[int, ...]:
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max(col) for col in zip(*self._terms))

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        pt = [Fraction(x) for x in point]
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(pt, e):
                term *= x ** k
            total += term
        return total

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    # -- formatting
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=grlex_key, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                f"t{i + 1}" if k == 1 else f"t{i + 1}^{k}"
                for i, k in enumerate(e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {str(self)!r})"

    def to_json(self) -> list:
        return [[list(e), self._terms[e]] for e in self.support()]

    @classmethod
    def from_json(cls, nvars: int, data) -> "LaurentPolynomial":
        return cls(nvars, [(tuple(e), c) for e, c in data])


def mul(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    if f.nvars != g.nvars:
        raise ValueError(f"nvars mismatch: {f.nvars} vs {g.nvars}")
    if len(f) < len(g):
        f, g = g, f
    out: dict[tuple[int, ...], int] = {}
    gi = list(g._terms.items())
    for e1, c1 in f._terms.items():
        for e2, c2 in gi:
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    out = {e: c for e, c in out.items() if c}
    for e in out:
        _check_exponent(e)
    return LaurentPolynomial._raw(f.nvars, out)


def monomial(e, coeff: int = 1) -> LaurentPolynomial:
    e = tuple(e)
    return LaurentPolynomial(len(e), {e: coeff})


def binomial(a) -> LaurentPolynomial:
    """``t^a - 1``; the zero polynomial when ``a`` is the zero vector."""
    a = tuple(int(x) for x in a)
    n = len(a)
    if not any(a):
        return LaurentPolynomial.zero(n)
    return LaurentPolynomial(n, {a: 1, (0,) * n: -1})


def divide_exact(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient ``f / g``; raises :class:`NotDivisibleError` otherwise.

    Both operands are first translated so every variable has minimum
    exponent 0.  The quotient of such polynomials (if it exists) again has
    minimum exponent 0 in each variable, so ordinary long division in
    graded lex order decides divisibility.
    """
    if f.nvars != g.nvars:
        raise ValueError(f"nvars mismatch: {f.nvars} vs {g.nvars}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = f.nvars
    if f.is_zero():
        return LaurentPolynomial.zero(n)
    fmin, gmin = f.min_exponents(), g.min_exponents()
    rem = dict(f.shift(tuple(-x for x in fmin))._terms)
    gg = g.shift(tuple(-x for x in gmin))
    lead_e, lead_c = gg.leading()
    g_rest = [(e, c) for e, c in gg._terms.items() if e != lead_e]

    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple[int, ...], int] = {}
    while heap:
        _, neg = heapq.heappop(heap)
        e = tuple(-x for x in neg)
        c = rem.pop(e, 0)
        if not c:
            continue
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if min(shift) < 0 or c % lead_c:
            raise NotDivisibleError(f"not divisible: remainder term {c}*t^{e}")
        qc = c // lead_c
        quot[shift] = qc
        for ge, gc in g_rest:
            te = tuple(a + b for a, b in zip(shift, ge))
            s = rem.get(te, 0) - qc * gc
            if s:
                if te not in rem:
                    heapq.heappush(heap, (-sum(te), tuple(-x for x in te)))
                rem[te] = s
            else:
                rem.pop(te, None)
    back = tuple(a - b for a, b in zip(fmin, gmin))
    return LaurentPolynomial._raw(n, quot).shift(back)


def canonicalize(f: LaurentPolynomial) -> LaurentPolynomial:
    """Unit-normal representative: minimum exponent 0 in each variable and a
    positive coefficient on the graded-lex smallest term."""
    if f.is_zero():
        raise ValueError("cannot canonicalize the zero polynomial")
    g = f.shift(tuple(-x for x in f.min_exponents()))
    lowest = min(g._terms, key=grlex_key)
    return -g if g._terms[lowest] < 0 else g


def support_polytope(f: LaurentPolynomial):
    """Newton polytope: convex hull of the exponent vectors of ``f``."""
    from .geometry import convex_hull

    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return convex_hull(f._terms.keys(), dim=f.nvars)
