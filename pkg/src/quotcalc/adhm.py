"""Exact laboratory for the commuting-matrix model of Quot schemes.

A datum is a pair of l x l rational matrices (x, y) together with r vectors
in Q^l.  Stability means no proper subspace is invariant under both
matrices while containing every vector; on stable commuting data the
embedding dimension of the corresponding Quot-scheme point is read off
from the rank of the commutator differential.  The rank-one locus of the
3 x 2 matrix pencil (the traceless 2 x 2 commuting variety) is modelled
separately with its minor equations, parametrisation, and Hilbert series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import PreconditionError
from .linalg import Matrix, RowSpan, Vector
from .rational import Rat, binom, rat

__all__ = [
    "AdhmDatum",
    "Sl2Point",
    "commutator_residual",
    "stability_check",
    "stability_brute_force_l2",
    "stabilizer_dim",
    "tangent_dim_quotient",
    "sl2_minor_residual",
    "sl2_param_point",
    "sl2_jacobian_rank",
    "sl2_hilbert_coefficient",
    "is_palindromic",
    "gorenstein_symmetry_test",
]


@dataclass(frozen=True)
class AdhmDatum:
    """Two l x l matrices and r framing vectors."""

    l: int
    r: int
    x: Matrix
    y: Matrix
    v: tuple[Vector, ...]

    def __post_init__(self) -> None:
        l, r = self.l, self.r
        if l < 1 or r < 1:
            raise ValueError("l and r must be positive")
        for name, m in (("x", self.x), ("y", self.y)):
            if len(m) != l or any(len(row) != l for row in m):
                raise ValueError(f"matrix {name} is not {l}x{l}")
        if len(self.v) != r or any(len(w) != l for w in self.v):
            raise ValueError(f"expected {r} vectors of length {l}")

    @staticmethod
    def create(x: Sequence[Sequence[Rat]], y: Sequence[Sequence[Rat]],
               v: Sequence[Sequence[Rat]]) -> "AdhmDatum":
        xm = linalg.matrix(x)
        ym = linalg.matrix(y)
        vv = tuple(linalg.vector(w) for w in v)
        return AdhmDatum(len(xm), len(vv), xm, ym, vv)


def commutator_residual(d: AdhmDatum) -> Matrix:
    """xy - yx; the datum satisfies the commuting equations iff this is 0."""
    return linalg.mat_sub(linalg.mat_mul(d.x, d.y), linalg.mat_mul(d.y, d.x))


def stability_check(d: AdhmDatum) -> bool:
    """Krylov closure test for stability.

    Grows the span of the framing vectors by applying x and y until it
    stabilises; the datum is stable iff the closure is the whole space.
    """
    span = RowSpan(d.l)
    frontier: list[Vector] = []
    for w in d.v:
        if span.add(w):
            frontier.append(w)
    while frontier and span.dim < d.l:
        next_frontier = []
        for w in frontier:
            for m in (d.x, d.y):
                image = linalg.mat_vec(m, w)
                if span.add(image):
                    next_frontier.append(image)
        frontier = next_frontier
    return span.dim == d.l


def stability_brute_force_l2(d: AdhmDatum) -> bool:
    """Independent stability oracle for l = 2.

    The proper invariant subspaces of a plane are the origin and the common
    eigenlines of x and y; a degenerate framing (all vectors parallel or
    zero) is the only way such a line can contain every v_i.
    """
    if d.l != 2:
        raise PreconditionError("brute-force oracle only covers l = 2")
    span = RowSpan(2)
    witness: Vector | None = None
    for w in d.v:
        if span.add(w):
            witness = w
    if span.dim == 0:
        return False      # the zero subspace traps an all-zero framing
    if span.dim == 2:
        return True
    assert witness is not None

    def parallel(a: Vector, b: Vector) -> bool:
        return a[0] * b[1] - a[1] * b[0] == 0

    line_invariant = (parallel(witness, linalg.mat_vec(d.x, witness))
                      and parallel(witness, linalg.mat_vec(d.y, witness)))
    return not line_invariant


def _commutation_rows(m: Matrix, l: int) -> list[list[Fraction]]:
    """Rows of the linear condition A m - m A = 0 in the l^2 entries of A."""
    rows = []
    for i in range(l):
        for j in range(l):
            row = [Fraction(0)] * (l * l)
            # coefficient of a_(p,q) in (A m - m A)_(i,j)
            for q in range(l):
                row[i * l + q] += m[q][j]
            for p in range(l):
                row[p * l + j] -= m[i][p]
            rows.append(row)
    return rows


def stabilizer_dim(d: AdhmDatum) -> int:
    """Dimension of the stabiliser Lie algebra of the datum.

    Solves {A : Ax = xA, Ay = yA, A v_i = 0 for all i} exactly; a stable
    datum has stabiliser zero.
    """
    l = d.l
    rows = _commutation_rows(d.x, l) + _commutation_rows(d.y, l)
    for w in d.v:
        for i in range(l):
            row = [Fraction(0)] * (l * l)
            for q in range(l):
                row[i * l + q] = w[q]
            rows.append(row)
    return l * l - linalg.rank(rows)


def tangent_dim_quotient(d: AdhmDatum) -> int:
    """Embedding dimension of the Quot scheme at a stable commuting datum.

    Computes 2l^2 + rl - rank(d mu) - l^2, where d mu sends (xi, eta) to
    [xi, y] + [x, eta]; subtracting l^2 accounts for the free group action
    on the stable locus.
    """
    if not linalg.is_zero_matrix(commutator_residual(d)):
        raise PreconditionError("datum does not satisfy the commuting equations")
    if not stability_check(d):
        raise PreconditionError("datum is not stable")
    l = d.l
    rows = []
    for i in range(l):
        for j in range(l):
            row = [Fraction(0)] * (2 * l * l)
            # [xi, y]_(i,j): xi_(i,q) y_(q,j) - y_(i,p) xi_(p,j)
            for q in range(l):
                row[i * l + q] += d.y[q][j]
            for p in range(l):
                row[p * l + j] -= d.y[i][p]
            # [x, eta]_(i,j): x_(i,p) eta_(p,j) - eta_(i,q) x_(q,j)
            for p in range(l):
                row[l * l + p * l + j] += d.x[i][p]
            for q in range(l):
                row[l * l + i * l + q] -= d.x[q][j]
            rows.append(row)
    rank_dmu = linalg.rank(rows)
    return (2 * l * l + d.r * l - rank_dmu) - l * l


# -- the traceless 2x2 commuting variety -------------------------------------


@dataclass(frozen=True)
class Sl2Point:
    """Coordinates (x1, x2, x3, y1, y2, y3) of a candidate point."""

    x1: Fraction
    x2: Fraction
    x3: Fraction
    y1: Fraction
    y2: Fraction
    y3: Fraction

    @staticmethod
    def create(x1: Rat, x2: Rat, x3: Rat, y1: Rat, y2: Rat, y3: Rat) -> "Sl2Point":
        return Sl2Point(rat(x1), rat(x2), rat(x3), rat(y1), rat(y2), rat(y3))


def sl2_minor_residual(p: Sl2Point) -> tuple[Fraction, Fraction, Fraction]:
    """The three 2x2 minors whose vanishing cuts out the variety."""
    return (p.x1 * p.y2 - p.x2 * p.y1,
            p.x1 * p.y3 - p.x3 * p.y1,
            p.x2 * p.y3 - p.x3 * p.y2)


def sl2_param_point(a: Rat, b: Rat, z1: Rat, z2: Rat, z3: Rat) -> Sl2Point:
    """Point (a z_i, b z_i) of the weight (1,1,-1,-1,-1) quotient chart."""
    a, b = rat(a), rat(b)
    z = (rat(z1), rat(z2), rat(z3))
    return Sl2Point(a * z[0], a * z[1], a * z[2], b * z[0], b * z[1], b * z[2])


def sl2_jacobian_rank(p: Sl2Point) -> int:
    """Rank of the 3x6 Jacobian of the minors at a point of the variety."""
    if sl2_minor_residual(p) != (0, 0, 0):
        raise PreconditionError("point does not satisfy the minor equations")
    zero = Fraction(0)
    jac = [
        [p.y2, -p.y1, zero, -p.x2, p.x1, zero],
        [p.y3, zero, -p.y1, -p.x3, zero, p.x1],
        [zero, p.y3, -p.y2, zero, -p.x3, p.x2],
    ]
    return linalg.rank(jac)


def sl2_hilbert_coefficient(n: int) -> int:
    """Graded dimension of the invariant ring in degree n.

    Counts monomials a^s b^t z1^e1 z2^e2 z3^e3 with s + t = e1 + e2 + e3 = n,
    giving (n+1) * C(n+2, 2).
    """
    if n < 0:
        raise PreconditionError("degree must be nonnegative")
    return (n + 1) * int(binom(n + 2, 2))


def is_palindromic(h: Sequence[int]) -> bool:
    """Whether a coefficient vector reads the same in both directions."""
    return list(h) == list(reversed(h))


def gorenstein_symmetry_test() -> bool:
    """Palindromy test for the h-vector (1, 2) of the Hilbert series.

    The numerator of the series is 1 + 2q, which is not palindromic, so the
    coordinate ring fails the symmetry a Gorenstein grading would force.
    """
    return is_palindromic((1, 2))
