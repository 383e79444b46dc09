"""Independent reference computations and random generators for the tests.

Nothing here calls the elimination code under test: determinants are by
cofactor expansion or sympy, signatures by counting sign changes of the
characteristic polynomial.
"""

import random

import sympy as sp

from hdknots.laurent import LaurentPoly
from hdknots.seifert import SeifertMatrix


def cofactor_det(m, zero=0, one=1):
    """Laplace expansion along the first row, skipping zero entries."""
    n = len(m)
    if n == 0:
        return one
    if n == 1:
        return m[0][0]
    total = zero
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def laurent_cofactor_det(m):
    return cofactor_det([list(r) for r in m], LaurentPoly(), LaurentPoly.constant(1))


def _sign_changes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_signature(matrix):
    """Signature from the characteristic polynomial.

    A real symmetric matrix has only real eigenvalues, so Descartes' rule of
    signs counts positive (and, via p(-x), negative) roots exactly.
    """
    n = len(matrix)
    if n == 0:
        return 0
    x = sp.symbols("x")
    p = sp.Matrix(matrix).charpoly(x)
    coeffs = [int(c) for c in p.all_coeffs()]  # highest degree first
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    pos = _sign_changes(coeffs)
    deg = len(coeffs) - 1
    neg = _sign_changes([c * (-1) ** (deg - i) for i, c in enumerate(coeffs)])
    return pos - neg


def sympy_det(matrix):
    return int(sp.Matrix(matrix).det()) if matrix else 1


def interpolated_alexander_det(s: SeifertMatrix) -> LaurentPoly:
    """det(tA - (-1)^k A^T) by evaluating at integer points and interpolating."""
    a = sp.Matrix(s.matrix)
    eps = s.epsilon
    n = s.size
    t = sp.symbols("t")
    pts = [(x, (x * a - eps * a.T).det()) for x in range(1, n + 3)]
    poly = sp.Poly(sp.expand(sp.interpolate(pts, t)), t)
    coeffs = [int(c) for c in poly.all_coeffs()[::-1]]
    return LaurentPoly.from_coefficients(coeffs)


def random_laurent(rng: random.Random, lo=-2, hi=2, cmax=3, max_terms=3) -> LaurentPoly:
    return LaurentPoly(
        (rng.randint(lo, hi), rng.randint(-cmax, cmax)) for _ in range(rng.randint(0, max_terms))
    )


def random_laurent_matrix(rng: random.Random, n: int):
    return [[random_laurent(rng) for _ in range(n)] for _ in range(n)]


def random_unimodular(rng: random.Random, n: int, steps: int = 6):
    """Product of random elementary integer matrices (and a sign flip)."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        if n == 1 and rng.random() < 0.5:
            u[0][0] = -1
        return u
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            u[r][j] += c * u[r][i]
    if rng.random() < 0.5:
        col = rng.randrange(n)
        for r in range(n):
            u[r][col] = -u[r][col]
    return u


def _congruent(a, u):
    n = len(a)
    au = [[sum(a[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(u[k][i] * au[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def random_valid_seifert(rng: random.Random, k: int, size: int) -> SeifertMatrix:
    """Random A with |det(A - (-1)^k A^T)| = 1; size must be even.

    Start from N + X with N = blockdiag([[0,1],[0,0]]) and X symmetric (k even)
    or skew (k odd), so that A - (-1)^k A^T is the standard unimodular form,
    then conjugate by a random unimodular U.
    """
    if size % 2:
        raise ValueError("valid Seifert matrices have even size")
    a = [[0] * size for _ in range(size)]
    for b in range(0, size, 2):
        a[b][b + 1] = 1
    for i in range(size):
        for j in range(i, size):
            c = rng.randint(-2, 2)
            if k % 2 == 0:
                a[i][j] += c
                if j != i:
                    a[j][i] += c
            elif j != i:
                a[i][j] += c
                a[j][i] -= c
    return SeifertMatrix(k, _congruent(a, random_unimodular(rng, size)))
