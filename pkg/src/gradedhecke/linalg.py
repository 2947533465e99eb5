"""
Exact linear algebra over Q or a cyclotomic field.

Matrices are lists of lists of field elements (Fraction or Cyc).  Everything
here is plain Gaussian elimination with exact division; no floating point
enters any returned value.  Floats appear only inside `rational_roots` as a
root-location hint, and every candidate root is verified exactly before use.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Cyc, frac, poly_divmod, poly_gcd, poly_trim

__all__ = [
    "mat_mul", "mat_vec", "mat_add", "mat_scale", "mat_sub", "identity",
    "zero_matrix", "transpose", "mat_eq", "mat_pow", "rref", "rank",
    "nullspace", "solve", "inverse", "min_poly", "char_poly",
    "rational_roots", "squarefree_part",
]


def zero_matrix(n, m, zero=Fraction(0)):
    return [[zero] * m for _ in range(n)]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            s = ai[0] * b[0][j]
            for t in range(1, k):
                if ai[t]:
                    s = s + ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = row[0] * v[0]
        for t in range(1, len(v)):
            if row[t]:
                s = s + row[t] * v[t]
        out.append(s)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_pow(a, m):
    n = len(a)
    out = identity(n)
    base = [row[:] for row in a]
    while m:
        if m & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        m >>= 1
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    _, pivots = rref(matrix)
    return len(pivots)


def nullspace(matrix):
    """Basis of the right kernel, one vector per free column."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One solution of A x = b, or None if inconsistent."""
    if not matrix:
        return [] if all(x == 0 for x in rhs) else None
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return x


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + list(irow) for row, irow in zip(matrix, identity(n))]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


# ---------------------------------------------------------------------------
# polynomials of matrices
# ---------------------------------------------------------------------------

def min_poly(matrix) -> list[Fraction]:
    """Minimal polynomial (monic, little-endian) via Krylov on the full space."""
    n = len(matrix)
    if n == 0:
        return [Fraction(1)]
    power = identity(n)
    flats = [[power[i][j] for i in range(n) for j in range(n)]]
    for _ in range(n):
        power = mat_mul(power, matrix)
        flats.append([power[i][j] for i in range(n) for j in range(n)])
        cols = transpose(flats)
        ker = nullspace(cols)
        if ker:
            rel = ker[0]
            lead = max(i for i, c in enumerate(rel) if c != 0)
            return [c / rel[lead] for c in rel[: lead + 1]]
    raise AssertionError("minimal polynomial must appear by degree n")


def char_poly(matrix) -> list[Fraction]:
    """Characteristic polynomial by the Faddeev-LeVerrier recursion."""
    n = len(matrix)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    work = identity(n)
    for k in range(1, n + 1):
        work = mat_mul(matrix, work)
        tr = sum((work[i][i] for i in range(n)), Fraction(0))
        c = -tr / k
        coeffs[n - k] = c
        if k < n:
            work = [row[:] for row in work]
            for i in range(n):
                work[i][i] = work[i][i] + c
    return coeffs


def squarefree_part(poly):
    """poly / gcd(poly, poly'), monic."""
    p = poly_trim([frac(c) for c in poly])
    if len(p) <= 1:
        return p
    dp = [i * c for i, c in enumerate(p)][1:]
    g = poly_gcd(p, dp)
    quo, rem = poly_divmod(p, g)
    assert not rem
    lead = quo[-1]
    return [c / lead for c in quo]


def _poly_eval(poly, x):
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def rational_roots(poly) -> list[Fraction]:
    """All rational roots of a rational polynomial, found exactly.

    Floating-point root locations are used purely as candidates; each
    candidate is confirmed by exact evaluation and then divided out, so the
    result is exact and complete (a rational root of the squarefree part is
    always a simple float root nearby).
    """
    import numpy as np

    p = squarefree_part(poly)
    if len(p) <= 1:
        return []
    roots: list[Fraction] = []
    approx = np.roots([float(c) for c in reversed(p)])
    for a in approx:
        if abs(a.imag) > 1e-8:
            continue
        for denom_cap in (64, 4096, 10 ** 9):
            cand = Fraction(a.real).limit_denominator(denom_cap)
            if _poly_eval(p, cand) == 0:
                if cand not in roots:
                    roots.append(cand)
                break
    # verify completeness by dividing out the found roots
    rem = p
    for root in roots:
        rem, r = poly_divmod(rem, [-root, Fraction(1)])
        assert not r
    roots.sort()
    return roots


def scalar_field_convert(matrix, order):
    """Lift a rational matrix into Q(zeta_order) entries."""
    if order in (None, 1):
        return matrix
    return [[x if isinstance(x, Cyc) else Cyc(order, [frac(x)]) for x in row]
            for row in matrix]
