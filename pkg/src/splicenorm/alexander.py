"""Alexander polynomial of a graph link, read off its splice diagram.

Every non-arrowhead vertex ``i`` contributes the factor
``(t^{l_i} - 1)^(valence_i - 2)``, where ``l_i`` is its column of linking
numbers; leaves (valence 1) therefore divide.  Knots get an extra
``(t - 1)``.  Factors with ``l_i = 0`` are counted separately and cancelled
formally against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import SpliceDiagram
from .errors import DiagramError, NotDivisibleError
from .laurent import LaurentPolynomial, binomial, canonicalize, divide_exact, mul
from .linking import linking_matrix

__all__ = ["AlexanderFactors", "alexander_factors", "alexander_polynomial"]


@dataclass(frozen=True)
class AlexanderFactors:
    """Unexpanded form: ``prod (t^e - 1)^k`` over numerator / denominator.

    Each list holds ``(exponent vector, multiplicity)`` pairs; zero exponent
    vectors are kept out of the lists and tracked in ``zero_factors``
    (numerator count minus denominator count).
    """

    nvars: int
    numerator: tuple[tuple[tuple[int, ...], int], ...]
    denominator: tuple[tuple[tuple[int, ...], int], ...]
    zero_factors: int


def alexander_factors(d: SpliceDiagram) -> AlexanderFactors:
    lm = linking_matrix(d)
    num: list[tuple[tuple[int, ...], int]] = []
    den: list[tuple[tuple[int, ...], int]] = []
    zeros = 0
    if d.r == 1:
        num.append(((1,), 1))
    for v in lm.columns:
        col = lm.column(v)
        k = lm.valence[v] - 2
        if k == 0:
            continue
        if not any(col):
            zeros += k
        elif k > 0:
            num.append((col, k))
        else:
            den.append((col, -k))
    return AlexanderFactors(d.r, tuple(num), tuple(den), zeros)


def _expand(nvars, factors) -> LaurentPolynomial:
    out = LaurentPolynomial.one(nvars)
    for e, k in factors:
        out = mul(out, binomial(e) ** k)
    return out


@lru_cache(maxsize=128)
def alexander_polynomial(d: SpliceDiagram) -> LaurentPolynomial:
    """Canonical representative of the Alexander polynomial (up to ``+-t^a``).

    The expanded numerator is divided by one denominator binomial at a
    time; if some intermediate step is inexact the fully expanded
    denominator is tried in one go.
    """
    fac = alexander_factors(d)
    if fac.zero_factors > 0:
        return LaurentPolynomial.zero(d.r)
    if fac.zero_factors < 0:
        raise DiagramError("negative net zero-factor multiplicity")
    numerator = _expand(d.r, fac.numerator)
    q = numerator
    try:
        for e, k in fac.denominator:
            for _ in range(k):
                q = divide_exact(q, binomial(e))
    except NotDivisibleError:
        q = divide_exact(numerator, _expand(d.r, fac.denominator))
    return canonicalize(q)
