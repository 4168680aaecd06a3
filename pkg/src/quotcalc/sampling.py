"""Seeded random generators for commuting-matrix experiments.

Entries are integers in [-10, 10] and every draw goes through a caller
supplied random.Random, so any reported failure replays from its seed.
Commuting pairs are built structurally (polynomials in a fixed matrix, or
simultaneous diagonal / Jordan shapes), never by solving the commuting
equations numerically.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from . import linalg
from .adhm import AdhmDatum, stability_check
from .linalg import Matrix, Vector

__all__ = [
    "random_vector",
    "random_matrix",
    "random_invertible",
    "random_commuting_pair",
    "regular_semisimple_pair",
    "random_datum",
    "random_stable_datum",
    "conjugate_datum",
    "companion_matrix",
]

ENTRY_MIN, ENTRY_MAX = -10, 10


def _entry(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(ENTRY_MIN, ENTRY_MAX))


def random_vector(rng: random.Random, l: int) -> Vector:
    return tuple(_entry(rng) for _ in range(l))


def random_matrix(rng: random.Random, l: int) -> Matrix:
    return tuple(random_vector(rng, l) for _ in range(l))


def random_invertible(rng: random.Random, l: int) -> Matrix:
    while True:
        g = random_matrix(rng, l)
        if linalg.det(g) != 0:
            return g


def companion_matrix(coeffs: Sequence[Fraction]) -> Matrix:
    """Companion matrix of t^l + c_(l-1) t^(l-1) + ... + c_0 (last column)."""
    l = len(coeffs)
    return tuple(
        tuple(Fraction(1) if i == j + 1 else
              (-coeffs[i] if j == l - 1 else Fraction(0))
              for j in range(l))
        for i in range(l))


def _diagonal(entries: Sequence[Fraction]) -> Matrix:
    l = len(entries)
    return tuple(tuple(entries[i] if i == j else Fraction(0)
                       for j in range(l)) for i in range(l))


def _jordan_upper(rng: random.Random, l: int) -> Matrix:
    """Block upper-triangular Jordan-type matrix with random eigenvalues."""
    eigen = [_entry(rng) for _ in range(l)]
    rows = [[Fraction(0)] * l for _ in range(l)]
    i = 0
    while i < l:
        size = rng.randint(1, l - i)
        lam = eigen[i]
        for k in range(size):
            rows[i + k][i + k] = lam
            if k + 1 < size:
                rows[i + k][i + k + 1] = Fraction(1)
        i += size
    return tuple(tuple(row) for row in rows)


def _poly_in(rng: random.Random, m: Matrix, max_degree: int = 2) -> Matrix:
    """Random polynomial in m with small integer coefficients."""
    l = len(m)
    result = _diagonal([_entry(rng)] * l)
    power = linalg.identity(l)
    for _ in range(max_degree):
        power = linalg.mat_mul(power, m)
        c = Fraction(rng.randint(-3, 3))
        result = tuple(tuple(result[i][j] + c * power[i][j]
                             for j in range(l)) for i in range(l))
    return result


def random_commuting_pair(rng: random.Random, l: int) -> tuple[Matrix, Matrix]:
    """A structurally commuting pair drawn from several shape families."""
    shape = rng.randrange(5)
    if shape == 0:     # simultaneous diagonal
        x = _diagonal([_entry(rng) for _ in range(l)])
        y = _diagonal([_entry(rng) for _ in range(l)])
    elif shape == 1:   # scalar times identity against anything
        x = _diagonal([_entry(rng)] * l)
        y = random_matrix(rng, l)
    elif shape == 2:   # polynomial in a dense matrix
        x = random_matrix(rng, l)
        y = _poly_in(rng, x)
    elif shape == 3:   # polynomial in a Jordan-type matrix
        x = _jordan_upper(rng, l)
        y = _poly_in(rng, x)
    else:              # polynomial in a companion matrix
        x = companion_matrix([_entry(rng) for _ in range(l)])
        y = _poly_in(rng, x)
    return x, y


def regular_semisimple_pair(rng: random.Random, l: int) -> tuple[Matrix, Matrix]:
    """Commuting diagonal pair with distinct eigenvalues on both factors."""
    pool = list(range(ENTRY_MIN, ENTRY_MAX + 1))
    x = _diagonal([Fraction(c) for c in rng.sample(pool, l)])
    y = _diagonal([Fraction(c) for c in rng.sample(pool, l)])
    return x, y


def random_datum(rng: random.Random, l: int, r: int) -> AdhmDatum:
    """Commuting datum with random framing; stability not guaranteed."""
    x, y = random_commuting_pair(rng, l)
    v = tuple(random_vector(rng, l) for _ in range(r))
    return AdhmDatum(l, r, x, y, v)


def _cyclic_fallback(rng: random.Random, l: int, r: int) -> AdhmDatum:
    x = companion_matrix([_entry(rng) for _ in range(l)])
    y = _poly_in(rng, x)
    e1 = tuple(Fraction(1 if i == 0 else 0) for i in range(l))
    v = (e1,) + tuple(random_vector(rng, l) for _ in range(r - 1))
    return AdhmDatum(l, r, x, y, v)


def random_stable_datum(rng: random.Random, l: int, r: int,
                        max_tries: int = 40) -> AdhmDatum:
    """Stable commuting datum; falls back to a cyclic shape if sampling
    structured data does not hit the stable locus quickly."""
    for _ in range(max_tries):
        d = random_datum(rng, l, r)
        if stability_check(d):
            return d
    while True:
        d = _cyclic_fallback(rng, l, r)
        if stability_check(d):
            return d


def conjugate_datum(d: AdhmDatum, g: Matrix) -> AdhmDatum:
    """Act by g: conjugate both matrices and push the framing forward."""
    g_inv = linalg.inverse(g)
    return AdhmDatum(
        d.l, d.r,
        linalg.mat_mul(g, linalg.mat_mul(d.x, g_inv)),
        linalg.mat_mul(g, linalg.mat_mul(d.y, g_inv)),
        tuple(linalg.mat_vec(g, w) for w in d.v),
    )
