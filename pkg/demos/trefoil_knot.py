# The trefoil as a one-node splice diagram with leaves of weight 2 and 3.
from splicenorm import alexander_polynomial, alexander_norm, fiber_genus, thurston_norm, trefoil
from splicenorm.geometry import zonotope_newton

k = trefoil()
print("Alexander polynomial:", alexander_polynomial(k))
print("Newton segment:", [int(v[0]) for v in zonotope_newton(k).vertices])

# for knots the Alexander norm exceeds the Thurston norm by |phi|
for n in range(1, 5):
    t, a = thurston_norm(k, (n,)), alexander_norm(k, (n,))
    print(f"  phi={n}: T={t} A={a} A-T={a - t}")

g = fiber_genus(k, (1,))
print("fiber genus:", g.genus)
