from fractions import Fraction

import sympy
from hypothesis import given, settings

from splicenorm.alexander import alexander_factors, alexander_polynomial
from splicenorm.diagram import parse_diagram, seifert_diagram, splice
from splicenorm.laurent import LaurentPolynomial, canonicalize, monomial
from splicenorm.linking import linking_matrix

from conftest import diagrams

T = sympy.symbols("t1:9")


def from_sympy(expr, nvars):
    num, den = sympy.fraction(sympy.together(expr))
    # den is a monomial; fold it into negative exponents
    den_exp = sympy.Poly(den, *T[:nvars]).monoms()[0]
    terms = {}
    for exp, c in sympy.Poly(sympy.expand(num), *T[:nvars]).terms():
        terms[tuple(a - b for a, b in zip(exp, den_exp))] = int(c)
    return LaurentPolynomial(nvars, terms)


def mono(*e):
    return sympy.Mul(*[t ** k for t, k in zip(T, e)])


def factor_quotient(d):
    """The product formula evaluated with sympy rational functions."""
    lm = linking_matrix(d)
    expr = sympy.Integer(1)
    for v in lm.columns:
        expr *= (mono(*lm.column(v)) - 1) ** (lm.valence[v] - 2)
    if d.r == 1:
        expr *= T[0] - 1
    return sympy.cancel(expr)


def test_len_matches_quotient(len_diagram):
    f = alexander_polynomial(len_diagram)
    assert f == canonicalize(from_sympy(factor_quotient(len_diagram), 3))
    assert len(f) == 20


def test_len_factored_form(len_diagram):
    u = mono(5, 3, 3)
    factored = (-mono(-15, -25, -25) * (u - 1) * (u + 1) ** 2
                * (T[0] ** 12 + mono(9, 4, 4) + mono(6, 8, 8) + mono(3, 12, 12)
                   + mono(0, 16, 16)))
    assert alexander_polynomial(len_diagram) == canonicalize(from_sympy(factored, 3))


def test_len_raw_factors(len_diagram):
    fac = alexander_factors(len_diagram)
    assert fac.numerator == (((15, -20, -20), 1), ((-10, -6, -6), 2))
    assert fac.denominator == (((3, -4, -4), 1), ((-5, -3, -3), 1))
    assert fac.zero_factors == 0


def test_trefoil(trefoil_diagram):
    t = monomial((1,))
    one = LaurentPolynomial.one(1)
    assert alexander_polynomial(trefoil_diagram) == t * t - t + one


def test_cable_knot():
    # (2,3) torus knot spliced with a (2,1)-cable pattern: a two-node knot
    knot = seifert_diagram(1, [1], [2, 3], prefix="k")
    cable = seifert_diagram(1, [1, 13], [2], prefix="c")
    d = splice(knot, "ka1", cable, "ca2")
    assert d.r == 1 and d.p == 2
    f = alexander_polynomial(d)
    assert f == canonicalize(from_sympy(factor_quotient(d), 1))
    # symmetric, and monic up to sign
    coeffs = [f.terms.get((k,), 0) for k in range(f.max_exponents()[0] + 1)]
    assert coeffs == coeffs[::-1]
    assert abs(coeffs[0]) == 1


def test_zero_factor_hopf_like():
    # two unknotted components linked through one node with a weight-1 leaf
    d = parse_diagram("""graphlink z
node n +
arrow a
arrow b
leaf c
edge n a 1 -
edge n b 1 -
edge n c 1 -
""", check=False)
    fac = alexander_factors(d)
    assert fac.zero_factors == 0
    assert alexander_polynomial(d) == LaurentPolynomial.one(2)


PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def unit_exponents(d, f, primes):
    """Evaluate f / (product formula) at distinct primes and read off the
    monomial unit; None if the ratio is not of the form +-prod p_i^m_i."""
    lm = linking_matrix(d)
    ratio = f.evaluate(primes)
    for v in lm.columns:
        val = Fraction(1)
        for p, e in zip(primes, lm.column(v)):
            val *= Fraction(p) ** e
        ratio /= (val - 1) ** (lm.valence[v] - 2)
    if d.r == 1:
        ratio /= primes[0] - 1
    m = []
    num, den = abs(ratio.numerator), ratio.denominator
    for p in primes:
        k = 0
        while num % p == 0:
            num //= p
            k += 1
        while den % p == 0:
            den //= p
            k -= 1
        m.append(k)
    if num != 1 or den != 1:
        return None
    return tuple(m)


@settings(max_examples=60, deadline=None)
@given(diagrams(max_nodes=3))
def test_matches_product_formula(d):
    f = alexander_polynomial(d)
    m1 = unit_exponents(d, f, PRIMES[: d.r])
    m2 = unit_exponents(d, f, PRIMES[d.r: 2 * d.r])
    assert m1 is not None and m1 == m2


def test_sympy_quotient_small_corpus():
    from conftest import seeded_corpus
    for d in seeded_corpus(15, 4, max_nodes=2, weight_bound=3):
        f = alexander_polynomial(d)
        assert f == canonicalize(from_sympy(factor_quotient(d), d.r))
