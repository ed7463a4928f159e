"""Small exact integer linear algebra: Hermite-style row reduction with a
unimodular transform, saturated integer kernels, determinants and inverses.

Matrices are lists of rows of Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def row_hermite(a: Matrix) -> tuple[Matrix, Matrix, int]:
    """Return ``(H, U, rank)`` with ``U`` unimodular and ``U @ a == H``.

    ``H`` is in row echelon form with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``; rows past ``rank`` are zero.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    h = [list(r) for r in a]
    u = identity(m)
    row = 0
    for col in range(n):
        if row == m:
            break
        # Euclid on the column below `row`
        while True:
            nz = [i for i in range(row, m) if h[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][col]))
            h[row], h[piv] = h[piv], h[row]
            u[row], u[piv] = u[piv], u[row]
            done = True
            for i in range(row + 1, m):
                if h[i][col]:
                    f = h[i][col] // h[row][col]
                    h[i] = [x - f * y for x, y in zip(h[i], h[row])]
                    u[i] = [x - f * y for x, y in zip(u[i], u[row])]
                    if h[i][col]:
                        done = False
            if done:
                break
        if h[row][col] == 0:
            continue
        if h[row][col] < 0:
            h[row] = [-x for x in h[row]]
            u[row] = [-x for x in u[row]]
        for i in range(row):
            f = h[i][col] // h[row][col]
            if f:
                h[i] = [x - f * y for x, y in zip(h[i], h[row])]
                u[i] = [x - f * y for x, y in zip(u[i], u[row])]
        row += 1
    return h, u, row


def rank(a: Matrix) -> int:
    return row_hermite(a)[2] if a else 0


def left_kernel(a: Matrix) -> Matrix:
    """Basis of the saturated lattice ``{y in Z^m : y @ a == 0}``, in Hermite form."""
    _, u, rk = row_hermite(a)
    k = u[rk:]
    if not k:
        return []
    hk, _, _ = row_hermite(k)
    return [r for r in hk if any(r)]


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_unimodular(a: Matrix) -> Matrix:
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def primitive(v) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries; first nonzero entry made positive."""
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    out = [int(x) // g for x in v]
    lead = next(x for x in out if x)
    if lead < 0:
        out = [-x for x in out]
    return tuple(out)


def coordinate_completion(kernel: Matrix, n: int, k: int) -> Matrix | None:
    """Find coordinates ``S`` (|S| = k, lexicographically first) such that the
    unit rows ``e_S`` stacked over ``kernel`` form a unimodular matrix."""
    for s in combinations(range(n), k):
        f = [[int(j == i) for j in range(n)] for i in s] + [list(r) for r in kernel]
        if abs(det(f)) == 1:
            return f
    return None
