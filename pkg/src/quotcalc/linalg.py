"""Exact linear algebra over the rationals.

Ranks are computed by fraction-free (Bareiss) elimination on integer
matrices obtained by clearing denominators row by row; no floating point
enters anywhere.  Matrices are plain tuples of tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .rational import Rat, rat

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


def matrix(rows: Sequence[Sequence[Rat]]) -> Matrix:
    return tuple(tuple(rat(x) for x in row) for row in rows)


def vector(entries: Sequence[Rat]) -> Vector:
    return tuple(rat(x) for x in entries)


def zero_matrix(n: int, m: int) -> Matrix:
    return tuple((Fraction(0),) * m for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                 for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b)))
                       for j in range(len(b[0])))
                 for i in range(len(a)))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def _integer_rows(rows: Sequence[Sequence[Rat]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        fr = [rat(x) for x in row]
        mult = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * mult) for f in fr])
    return out


def rank(rows: Sequence[Sequence[Rat]]) -> int:
    """Rank via fraction-free Bareiss elimination."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][col]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[col]
            for j in range(col, ncols):
                mi[j] = (pv * mi[j] - f * m[r][j]) // prev
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def nullity(rows: Sequence[Sequence[Rat]], ncols: int) -> int:
    return ncols - rank(rows)


def det(rows: Sequence[Sequence[Rat]]) -> Fraction:
    """Determinant by Bareiss elimination with denominator tracking."""
    fr = [[rat(x) for x in row] for row in rows]
    n = len(fr)
    if any(len(row) != n for row in fr):
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    m = []
    for row in fr:
        mult = lcm(*(f.denominator for f in row)) if row else 1
        scale *= mult
        m.append([int(f * mult) for f in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                m[i][j] = (pv * m[i][j] - m[i][col] * m[col][j]) // prev
            m[i][col] = 0
        prev = pv
    return Fraction(sign * m[n - 1][n - 1], 1) / scale


def inverse(rows: Sequence[Sequence[Rat]]) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over Fraction."""
    a = [list(map(rat, row)) for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse of a non-square matrix")
    aug = [a[i] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RowSpan:
    """Growing row span with fraction-free echelon updates.

    Basis rows are primitive integer vectors in echelon form; adding a
    vector reduces it by cross-multiplication only, so everything stays
    integral.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def add(self, v: Sequence[Rat]) -> bool:
        """Adjoin a vector; return True if the span grew."""
        fr = [rat(x) for x in v]
        if len(fr) != self.ncols:
            raise ValueError("vector length mismatch")
        mult = lcm(*(f.denominator for f in fr)) if fr else 1
        w = [int(f * mult) for f in fr]
        for row, p in zip(self.rows, self.pivots):
            if w[p] != 0:
                f = w[p]
                pv = row[p]
                w = [pv * wj - f * rj for wj, rj in zip(w, row)]
        pivot = next((j for j, x in enumerate(w) if x != 0), None)
        if pivot is None:
            return False
        g = 0
        for x in w:
            g = gcd(g, abs(x))
        if g > 1:
            w = [x // g for x in w]
        self.rows.append(w)
        self.pivots.append(pivot)
        order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    def contains_only_zero(self) -> bool:
        return not self.rows
