"""Exact dense linear algebra over an arbitrary exact field.

Entries may be any type supporting +, -, *, /, unary -, bool() as a
nonzero test, and ==.  Rationals (gmpy2.mpq or Fraction) and cyclotomic
field elements both qualify.  Pivoting always takes the first nonzero
candidate, so every result is deterministic; there are no size heuristics
because the arithmetic is exact.
"""

import math

from .errors import SingularMatrix
from .rationals import HAVE_GMPY2, Int, Rat


def solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly; raises SingularMatrix."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        inv_p = prow[col]
        for r in range(n):
            if r == col:
                continue
            factor = aug[r][col]
            if factor:
                row = aug[r]
                scaled = factor / inv_p
                for c in range(col, n + 1):
                    row[c] = row[c] - scaled * prow[c]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def invert(matrix):
    """Exact inverse by Gauss-Jordan; raises SingularMatrix."""
    n = len(matrix)
    # identity block built from the entry type, so FieldElem matrices work too
    probe = next((e for row in matrix for e in row if e), None)
    if probe is None:
        raise SingularMatrix("zero matrix")
    one = probe / probe
    zero = probe - probe
    aug = [list(row) + [one if j == i else zero for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        pinv = prow[col]
        aug[col] = prow = [e / pinv for e in prow]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                row = aug[r]
                aug[r] = [row[c] - factor * prow[c] for c in range(2 * n)]
    return [row[n:] for row in aug]


def rank(matrix):
    """Rank by exact forward elimination."""
    if not matrix:
        return 0
    rows = [list(r) for r in matrix]
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        prow = rows[rk]
        for r in range(rk + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / prow[col]
                rows[r] = [rows[r][c] - factor * prow[c] for c in range(ncols)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def det_rational(matrix) -> Rat:
    """Exact determinant of a square matrix of rationals.

    Denominators are cleared row by row and the integer part handled by
    fraction-free Bareiss elimination, which keeps intermediate entries as
    exact minors instead of letting rational reductions thrash.
    """
    n = len(matrix)
    if n == 0:
        return Rat(1)
    scale = 1
    rows = []
    for row in matrix:
        qs = [Rat(e) for e in row]
        m = 1
        for q in qs:
            m = math.lcm(m, int(q.denominator))
        scale *= m
        if HAVE_GMPY2:
            rows.append([Int(q.numerator) * (m // int(q.denominator)) for q in qs])
        else:
            rows.append([int(q.numerator) * (m // int(q.denominator)) for q in qs])
    return Rat(_det_bareiss(rows), scale)


def _det_bareiss(m):
    # in-place fraction-free elimination; entries are exact k-minors
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            pivot = next((r for r in range(k + 1, n) if m[r][k]), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]
