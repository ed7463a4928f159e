# Walk through the three-component, two-node sample link.
# Run: python3 demos/len_walkthrough.py
from fractions import Fraction

from splicenorm import (alexander_polynomial, characteristic_hyperplanes, classify_facets,
                        essential_basis, l_en, linking_matrix, norm_report, unit_ball,
                        zonotope_newton)
from splicenorm.alexander import alexander_factors

d = l_en()
print(d, "arrows:", d.arrows, "nodes:", d.nodes, "leaves:", d.leaves)

# linking numbers: one column per node and leaf
lm = linking_matrix(d)
for v in lm.columns:
    print(f"  l({v}) = {lm.column(v)}")
print("node multipliers:", {n: str(m) for n, m in lm.node_multiplier.items()})

# the polynomial is a quotient of binomials that divides out exactly
fac = alexander_factors(d)
print("numerator factors:", fac.numerator)
print("denominator factors:", fac.denominator)
delta = alexander_polynomial(d)
print(f"Alexander polynomial ({len(delta)} terms):")
print("  ", delta)

# Newton polytope = zonotope of the node segments; it is flat in 3-space
P = zonotope_newton(d)
red = essential_basis(d)
print("b_1 =", red.b_1, " b_e =", red.b_e)
print("essential Newton vertices:", [tuple(map(int, v)) for v in red.project(P).vertices])

# norms of a few classes
for phi in [(1, 0, 0), (0, 1, 1), (4, 3, 0), (Fraction(1, 2), 0, 1)]:
    rep = norm_report(d, phi)
    print(f"  phi={tuple(map(str, phi))}: T={rep.thurston} A={rep.alexander} "
          f"fibered={rep.fibered}")

# reduced ball and its facets
print("ball vertices:", [tuple(map(str, v)) for v in unit_ball(d).vertices])
for h in characteristic_hyperplanes(d):
    a, b = h.reduced
    print(f"  hyperplane of {h.node}: {a}x + {b}y = 0")
rep = classify_facets(d)
print("facets fibered:", [f.fibered for f in rep.facets])
