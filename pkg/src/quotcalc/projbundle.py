"""Classes on a projective bundle P(E) -> S as zeta-polynomials.

A class is a polynomial in zeta = c1(O(1)) whose coefficients are truncated
surface classes.  No relation is imposed on zeta; integration happens only
through the pushforward rule

    p_* zeta^k = (-1)^(k+1-r) s_(k+1-r)(E),      r = rank E,

with s_j = 0 for j < 0 and s_j of degree > 2 dropped by the surface
truncation.  Multiplication is plain convolution, exact in the zeta
direction; truncation happens only in the surface-degree direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundles import segre_total, chern_total
from .chow import BundleData, GradedClass, SurfaceModel, integrate
from .errors import PreconditionError
from .rational import Rat, binom, rat

__all__ = [
    "ZetaClass",
    "pushforward_zeta",
    "integrate_proj",
    "segre_twisted_pull",
    "segre_omega_proj",
    "zeta_plus_divisor",
]


@dataclass(frozen=True)
class ZetaClass:
    """Polynomial in zeta with GradedClass coefficients, over a fixed P(E)."""

    bundle: BundleData
    coeffs: tuple[GradedClass, ...]

    @property
    def surface(self) -> SurfaceModel:
        return self.bundle.surface

    def __post_init__(self) -> None:
        for i, c in enumerate(self.coeffs):
            if c.surface != self.bundle.surface:
                raise PreconditionError(
                    f"coefficient {i} lives on {c.surface.name!r}, "
                    f"expected {self.bundle.surface.name!r}")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def constant(bundle: BundleData, cls: GradedClass) -> "ZetaClass":
        return ZetaClass(bundle, (cls,))

    @staticmethod
    def one(bundle: BundleData) -> "ZetaClass":
        return ZetaClass.constant(bundle, bundle.surface.unit())

    @staticmethod
    def zeta_power(bundle: BundleData, k: int) -> "ZetaClass":
        s = bundle.surface
        return ZetaClass(bundle, (s.zero(),) * k + (s.unit(),))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "ZetaClass") -> None:
        if self.bundle != other.bundle:
            raise PreconditionError(
                "zeta classes over different projective bundles")

    def __add__(self, other: "ZetaClass") -> "ZetaClass":
        self._check(other)
        s = self.surface
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else s.zero()
            b = other.coeffs[i] if i < len(other.coeffs) else s.zero()
            out.append(a + b)
        return ZetaClass(self.bundle, tuple(out))

    def __sub__(self, other: "ZetaClass") -> "ZetaClass":
        return self + other.scale(-1)

    def scale(self, c: Rat) -> "ZetaClass":
        c = rat(c)
        return ZetaClass(self.bundle, tuple(g.scale(c) for g in self.coeffs))

    def __mul__(self, other: "ZetaClass") -> "ZetaClass":
        """Convolution of coefficient lists; zeta degrees are kept exactly."""
        self._check(other)
        s = self.surface
        out = [s.zero() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return ZetaClass(self.bundle, tuple(out))

    def power(self, n: int) -> "ZetaClass":
        if n < 0:
            raise PreconditionError("negative power of a zeta class")
        result = ZetaClass.one(self.bundle)
        for _ in range(n):
            result = result * self
        return result

    # -- degree bookkeeping ----------------------------------------------------

    def total_part(self, k: int) -> "ZetaClass":
        """Terms of total degree k, counting zeta-degree plus surface degree."""
        out = []
        for a, g in enumerate(self.coeffs):
            out.append(g.part(k - a) if 0 <= k - a <= 2 else g.surface.zero())
        return ZetaClass(self.bundle, tuple(out))

    def truncate_total(self, cap: int) -> "ZetaClass":
        """Drop all terms of total degree above cap."""
        out = []
        for a, g in enumerate(self.coeffs):
            if a > cap:
                break
            keep = g.surface.zero()
            for k in range(min(2, cap - a) + 1):
                keep = keep + g.part(k)
            out.append(keep)
        return ZetaClass(self.bundle, tuple(out))


def pushforward_zeta(a: ZetaClass) -> GradedClass:
    """Push a zeta-polynomial down to the surface.

    Applies p_* zeta^k = (-1)^(k+1-r) s_(k+1-r)(E) termwise and multiplies
    by the corresponding coefficient; only s_0, s_1, s_2 survive on a
    surface.
    """
    e = a.bundle
    s_e = segre_total(e)
    total = e.surface.zero()
    for k, coeff in enumerate(a.coeffs):
        if coeff.is_zero():
            continue
        j = k + 1 - e.rank
        if j < 0 or j > 2:
            continue
        factor = s_e.part(j)
        if j % 2 == 1:
            factor = factor.scale(-1)
        total = total + factor * coeff
    return total


def integrate_proj(a: ZetaClass) -> Fraction:
    """Integral over P(E): integrate the pushforward over the surface."""
    return integrate(pushforward_zeta(a))


def zeta_plus_divisor(bundle: BundleData, line: BundleData) -> ZetaClass:
    """The degree-1 class zeta + p^* c1(L) on P(E)."""
    if line.rank != 1:
        raise PreconditionError("zeta_plus_divisor expects a rank-1 bundle")
    s = bundle.surface
    return ZetaClass(bundle, (s.divisor_class(line.c1), s.unit()))


def segre_twisted_pull(bundle: BundleData, f: BundleData, n: int,
                       cap: int | None = None) -> ZetaClass:
    """Total Segre class of p^*F twisted by O(n), up to total degree cap.

    The total Chern class of the twist is assembled from the twist formula
    with c1(O(n)) = n*zeta and c_j(F) = 0 for j >= 3, then inverted as a
    power series.  cap defaults to rank(E) + 3, enough for every integral
    this package evaluates.
    """
    s = bundle.surface
    if cap is None:
        cap = bundle.rank + 3
    c_f = chern_total(f)
    rk = f.rank
    nz = rat(n)
    # accumulate c(p^*F (x) O(n)) by zeta power
    acc: dict[int, GradedClass] = {}
    for j in range(rk + 1):
        for i in range(min(j, 2) + 1):
            coef = binom(rk - i, j - i) * nz ** (j - i)
            if coef == 0:
                continue
            zp = j - i
            term = c_f.part(i).scale(coef)
            acc[zp] = acc[zp] + term if zp in acc else term
    top = max(acc) if acc else 0
    c_twist = ZetaClass(bundle, tuple(acc.get(i, s.zero())
                                      for i in range(top + 1)))
    # invert: s = sum_m (1 - c)^m, each term raising total degree by >= 1
    one = ZetaClass.one(bundle)
    p = (one - c_twist).truncate_total(cap)
    series = one
    term = one
    for _ in range(cap):
        term = (term * p).truncate_total(cap)
        series = series + term
    return series.truncate_total(cap)


def segre_omega_proj(bundle: BundleData, cap: int | None = None) -> ZetaClass:
    """Total Segre class of the cotangent bundle of P(E).

    Factors as the pulled-back Segre class of the surface cotangent bundle
    times the Segre class of p^*E twisted by O(-1).
    """
    if cap is None:
        cap = bundle.rank + 3
    base = ZetaClass.constant(bundle, segre_total(bundle.surface.cotangent()))
    relative = segre_twisted_pull(bundle, bundle, -1, cap)
    return (base * relative).truncate_total(cap)
