"""Numerical Chow model of a surface and degree-truncated class arithmetic.

A surface is described by a divisor basis with its intersection pairing,
plus cotangent-bundle data.  A class is stored by its degree-0 scalar, its
degree-1 divisor vector, and the *integral* of its degree-2 part; every
quantity computed in this package is an intersection number, so nothing more
is needed.  All entries are exact rationals and every value is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError
from .rational import Rat, rat

__all__ = ["SurfaceModel", "GradedClass", "BundleData", "integrate",
           "line_bundle", "trivial_bundle"]


def _ratvec(v: Iterable[Rat]) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in v)


@dataclass(frozen=True)
class SurfaceModel:
    """Divisor lattice of a surface with pairing and cotangent data.

    pairing[i][j] is the intersection number of the i-th and j-th basis
    divisors.  omega_c1 / omega_c2_int are the first Chern class (as a
    divisor vector) and the second Chern number of the cotangent bundle;
    the topological Euler characteristic must equal the latter.
    """

    name: str
    divisors: tuple[str, ...]
    pairing: tuple[tuple[Fraction, ...], ...]
    omega_c1: tuple[Fraction, ...]
    omega_c2_int: Fraction
    chi_top: Fraction

    def __post_init__(self) -> None:
        n = len(self.divisors)
        if len(self.pairing) != n or any(len(row) != n for row in self.pairing):
            raise DimensionMismatchError(
                f"surface {self.name!r}: pairing must be {n}x{n}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.pairing[i][j] != self.pairing[j][i]:
                    raise DimensionMismatchError(
                        f"surface {self.name!r}: pairing is not symmetric "
                        f"at ({i},{j})")
        if len(self.omega_c1) != n:
            raise DimensionMismatchError(
                f"surface {self.name!r}: omega_c1 length {len(self.omega_c1)}"
                f" != divisor count {n}")
        if self.chi_top != self.omega_c2_int:
            raise DimensionMismatchError(
                f"surface {self.name!r}: chi_top {self.chi_top} != "
                f"omega_c2_int {self.omega_c2_int}")

    @staticmethod
    def create(name: str,
               divisors: Sequence[str],
               pairing: Sequence[Sequence[Rat]],
               omega_c1: Sequence[Rat],
               omega_c2_int: Rat,
               chi_top: Rat | None = None) -> "SurfaceModel":
        """Build a surface, coercing entries to exact rationals.

        chi_top defaults to omega_c2_int (the two must agree anyway).
        """
        c2 = rat(omega_c2_int)
        return SurfaceModel(
            name=name,
            divisors=tuple(divisors),
            pairing=tuple(_ratvec(row) for row in pairing),
            omega_c1=_ratvec(omega_c1),
            omega_c2_int=c2,
            chi_top=c2 if chi_top is None else rat(chi_top),
        )

    @property
    def num_divisors(self) -> int:
        return len(self.divisors)

    def pair(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """Intersection number of two divisor vectors."""
        if len(u) != self.num_divisors or len(v) != self.num_divisors:
            raise DimensionMismatchError(
                f"surface {self.name!r}: vector length mismatch")
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.pairing[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total

    # -- class constructors -------------------------------------------------

    def zero(self) -> "GradedClass":
        return GradedClass(self, Fraction(0),
                           (Fraction(0),) * self.num_divisors, Fraction(0))

    def unit(self) -> "GradedClass":
        return GradedClass(self, Fraction(1),
                           (Fraction(0),) * self.num_divisors, Fraction(0))

    def divisor_class(self, v: Sequence[Rat]) -> "GradedClass":
        return self.graded(0, v, 0)

    def point_class(self, x: Rat) -> "GradedClass":
        """Degree-2 class recorded by its integral."""
        return GradedClass(self, Fraction(0),
                           (Fraction(0),) * self.num_divisors, rat(x))

    def graded(self, deg0: Rat, deg1: Sequence[Rat], deg2int: Rat) -> "GradedClass":
        vec = _ratvec(deg1)
        if len(vec) != self.num_divisors:
            raise DimensionMismatchError(
                f"surface {self.name!r}: degree-1 vector length {len(vec)} "
                f"!= divisor count {self.num_divisors}")
        return GradedClass(self, rat(deg0), vec, rat(deg2int))

    def cotangent(self) -> "BundleData":
        """The cotangent bundle as rank-2 bundle data."""
        return BundleData(self, 2, self.omega_c1, self.omega_c2_int)


@dataclass(frozen=True)
class GradedClass:
    """A class truncated at degree 2: scalar + divisor vector + integral."""

    surface: SurfaceModel
    deg0: Fraction
    deg1: tuple[Fraction, ...]
    deg2int: Fraction

    def _check(self, other: "GradedClass") -> None:
        if self.surface != other.surface:
            raise DimensionMismatchError(
                f"classes over different surfaces: "
                f"{self.surface.name!r} vs {other.surface.name!r}")

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._check(other)
        return GradedClass(
            self.surface,
            self.deg0 + other.deg0,
            tuple(a + b for a, b in zip(self.deg1, other.deg1)),
            self.deg2int + other.deg2int,
        )

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        self._check(other)
        return GradedClass(
            self.surface,
            self.deg0 - other.deg0,
            tuple(a - b for a, b in zip(self.deg1, other.deg1)),
            self.deg2int - other.deg2int,
        )

    def __neg__(self) -> "GradedClass":
        return self.scale(-1)

    def scale(self, c: Rat) -> "GradedClass":
        c = rat(c)
        return GradedClass(self.surface, c * self.deg0,
                           tuple(c * a for a in self.deg1), c * self.deg2int)

    def __mul__(self, other: "GradedClass") -> "GradedClass":
        """Product in the truncated ring; degree > 2 terms are discarded."""
        self._check(other)
        deg0 = self.deg0 * other.deg0
        deg1 = tuple(self.deg0 * b + other.deg0 * a
                     for a, b in zip(self.deg1, other.deg1))
        deg2 = (self.deg0 * other.deg2int + other.deg0 * self.deg2int
                + self.surface.pair(self.deg1, other.deg1))
        return GradedClass(self.surface, deg0, deg1, deg2)

    def part(self, k: int) -> "GradedClass":
        """Homogeneous degree-k part (zero class for k outside 0..2)."""
        s = self.surface
        if k == 0:
            return GradedClass(s, self.deg0, (Fraction(0),) * s.num_divisors,
                               Fraction(0))
        if k == 1:
            return GradedClass(s, Fraction(0), self.deg1, Fraction(0))
        if k == 2:
            return GradedClass(s, Fraction(0),
                               (Fraction(0),) * s.num_divisors, self.deg2int)
        return s.zero()

    def is_zero(self) -> bool:
        return (self.deg0 == 0 and self.deg2int == 0
                and all(a == 0 for a in self.deg1))


def integrate(a: GradedClass) -> Fraction:
    """Integral over the surface: the recorded degree-2 number."""
    return a.deg2int


@dataclass(frozen=True)
class BundleData:
    """Numerical data of a locally free sheaf: rank, c1 vector, c2 number."""

    surface: SurfaceModel
    rank: int
    c1: tuple[Fraction, ...]
    c2int: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", _ratvec(self.c1))
        object.__setattr__(self, "c2int", rat(self.c2int))
        if self.rank < 1:
            raise ValueError(f"bundle rank must be >= 1, got {self.rank}")
        if len(self.c1) != self.surface.num_divisors:
            raise DimensionMismatchError(
                f"bundle on {self.surface.name!r}: c1 length {len(self.c1)} "
                f"!= divisor count {self.surface.num_divisors}")
        if self.rank == 1 and self.c2int != 0:
            raise ValueError("a rank-1 bundle has no second Chern class; "
                             "c2int must be 0")


def line_bundle(surface: SurfaceModel, c1: Sequence[Rat]) -> BundleData:
    """Invertible sheaf with the given first Chern class."""
    return BundleData(surface, 1, _ratvec(c1), Fraction(0))


def trivial_bundle(surface: SurfaceModel, rank: int) -> BundleData:
    return BundleData(surface, rank,
                      (Fraction(0),) * surface.num_divisors, Fraction(0))
