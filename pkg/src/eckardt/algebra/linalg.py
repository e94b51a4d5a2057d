"""Exact dense linear algebra over a Field (payload matrices as nested lists)."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .fields import Field


def bareiss(F: Field, m: Sequence[Sequence]) -> tuple[int, object]:
    """Fraction-free elimination.  Returns ``(rank, determinant)``.

    The determinant is meaningful only for square input (it is zero when the
    rank is deficient).
    """
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    sign = 1
    prev = F.one
    rank = 0
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((r for r in range(row, nrows) if not F.is_zero(a[r][col])), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
            sign = -sign
        pv = a[row][col]
        for r in range(row + 1, nrows):
            arc = a[r][col]
            for c in range(col + 1, ncols):
                num = F.sub(F.mul(pv, a[r][c]), F.mul(arc, a[row][c]))
                a[r][c] = F.div(num, prev)
            a[r][col] = F.zero
        prev = pv
        row += 1
        rank += 1
    if nrows == ncols and rank == nrows:
        det = a[nrows - 1][ncols - 1] if nrows else F.one
        det = det if sign > 0 else F.neg(det)
    else:
        det = F.zero
    return rank, det


def rank(F: Field, m: Sequence[Sequence]) -> int:
    return bareiss(F, m)[0]


def det(F: Field, m: Sequence[Sequence]):
    if len(m) != (len(m[0]) if m else 0):
        raise ValueError("determinant of a non-square matrix")
    return bareiss(F, m)[1]


def mat_mul(F: Field, a, b):
    return [
        [_dot(F, row, [b[k][j] for k in range(len(b))]) for j in range(len(b[0]))]
        for row in a
    ]


def mat_vec(F: Field, a, v):
    return [_dot(F, row, v) for row in a]


def _dot(F: Field, u, v):
    acc = F.zero
    for x, y in zip(u, v):
        if not F.is_zero(x) and not F.is_zero(y):
            acc = F.add(acc, F.mul(x, y))
    return acc


def inverse(F: Field, m):
    n = len(m)
    a = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not F.is_zero(a[r][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [F.mul(x, inv) for x in a[col]]
        for r in range(n):
            if r != col and not F.is_zero(a[r][col]):
                f = a[r][col]
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rref(F: Field, m):
    """Reduced row echelon form and pivot columns."""
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not F.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(x, inv) for x in a[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def kernel(F: Field, m) -> list[list]:
    """Basis of the right kernel ``{v : m v = 0}``."""
    ncols = len(m[0]) if m else 0
    a, pivots = rref(F, m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * ncols
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(a[i][fc])
        basis.append(v)
    return basis


def minors(m, k: int):
    """All k x k submatrices, in (rows, cols) lexicographic order."""
    n, c = len(m), len(m[0])
    for rows in combinations(range(n), k):
        for cols in combinations(range(c), k):
            yield [[m[r][cc] for cc in cols] for r in rows]


def det3_poly(m):
    """Cofactor determinant of a 3x3 matrix of MultiPoly (or anything with + - *)."""
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
