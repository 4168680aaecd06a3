"""Segre integrals over Quot schemes and Hilbert squares.

Two independent evaluation routes are provided wherever possible:

* the closed-form expressions (lambda_closed_form, segre_quot2_theorem,
  segre_quot1), and
* the projective-bundle pipeline that expands classes on P(E) in zeta and
  pushes forward (lambda_proj_direct, segre_quot1_direct).

The Hilbert-square engine is the double-point identity

    2 * I = lam_0^2 - sum_k (-1)^k C(2d+1, d-k) lam_k,
    lam_k = integral of c1(L)^(d-k) s_k(Omega^1)  over the d-fold X,

which for d = 2 carries the coefficient pattern (10, 5, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundles import segre_total, twist_bundle
from .chow import BundleData, SurfaceModel, integrate, trivial_bundle
from .errors import PreconditionError
from .projbundle import (ZetaClass, integrate_proj, segre_omega_proj,
                         zeta_plus_divisor)
from .rational import binom

__all__ = [
    "LambdaVector",
    "lambda_surface_direct",
    "lambda_proj_direct",
    "lambda_closed_form",
    "segre_hilb2",
    "segre_quot2_theorem",
    "segre_quot1",
    "segre_quot1_direct",
    "insertion_integral_l1",
]


@dataclass(frozen=True)
class LambdaVector:
    """The auxiliary integrals lam_0 .. lam_d of a polarised d-fold."""

    d: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise PreconditionError("dimension must be positive")
        if len(self.values) != self.d + 1:
            raise PreconditionError(
                f"lambda vector needs {self.d + 1} entries, "
                f"got {len(self.values)}")

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


def _require_line(line: BundleData, op: str) -> None:
    if line.rank != 1:
        raise PreconditionError(f"{op} expects a rank-1 twisting bundle")


def lambda_surface_direct(surface: SurfaceModel, m: BundleData) -> LambdaVector:
    """lam_k = integral of c1(M)^(2-k) s_k(Omega^1_S) for k = 0, 1, 2."""
    _require_line(m, "lambda_surface_direct")
    c1m = surface.divisor_class(m.c1)
    s_omega = segre_total(surface.cotangent())
    values = []
    for k in range(3):
        cls = s_omega.part(k)
        for _ in range(2 - k):
            cls = cls * c1m
        values.append(integrate(cls))
    return LambdaVector(2, tuple(values))


def lambda_proj_direct(e: BundleData, line: BundleData) -> LambdaVector:
    """The same integrals on X = P(E) with polarisation p^*L (x) O(1).

    lam_k integrates (zeta + c1 L)^(r+1-k) against the total-degree-k part
    of the Segre class of the cotangent bundle of P(E); everything is
    resolved through the pushforward rule.
    """
    _require_line(line, "lambda_proj_direct")
    r = e.rank
    s_omega = segre_omega_proj(e)
    hyper = zeta_plus_divisor(e, line)
    values = []
    for k in range(r + 2):
        integrand = hyper.power(r + 1 - k) * s_omega.total_part(k)
        values.append(integrate_proj(integrand))
    return LambdaVector(r + 1, tuple(values))


def _twist_integrals(e: BundleData, line: BundleData):
    """The four surface integrals every closed form is written in."""
    s = e.surface
    t = twist_bundle(e, line)
    i_s2 = integrate(segre_total(t))          # s2(E (x) L)
    i_s1s1 = s.pair(t.c1, t.c1)               # s1(E (x) L)^2
    i_s1o = s.pair(t.c1, s.omega_c1)          # s1(E (x) L) s1(Omega^1)
    i_o2 = s.pair(s.omega_c1, s.omega_c1) - s.omega_c2_int   # s2(Omega^1)
    return i_s2, i_s1s1, i_s1o, i_o2


def lambda_closed_form(e: BundleData, line: BundleData, k: int) -> Fraction:
    """Closed form for lam_k on P(E), polarised by p^*L (x) O(1).

    Binomials at out-of-range arguments vanish by the extended convention,
    so k = 0 collapses to the integral of s2(E (x) L).
    """
    _require_line(line, "lambda_closed_form")
    r = e.rank
    if not 0 <= k <= r + 1:
        raise PreconditionError(f"k = {k} out of range 0..{r + 1}")
    i_s2, i_s1s1, i_s1o, i_o2 = _twist_integrals(e, line)
    return ((Fraction(k * (k - 1), r * (r + 1)) + 1) * binom(r + k - 1, k) * i_s2
            - binom(r + k - 1, k - 1) * i_s1s1
            + (Fraction(k - 1, r) - 1) * binom(r + k - 2, k - 1) * i_s1o
            + binom(r + k - 3, k - 2) * i_o2)


def segre_hilb2(d: int, lam: LambdaVector) -> Fraction:
    """Top Segre number of a tautological line-bundle sheaf on X^[2].

    Returns the integral itself; the factor 2 coming from the double cover
    of the universal subscheme stays internal.
    """
    if lam.d != d:
        raise PreconditionError(
            f"lambda vector has dimension {lam.d}, expected {d}")
    total = lam[0] ** 2
    for k in range(d + 1):
        total -= (-1) ** k * binom(2 * d + 1, d - k) * lam[k]
    return total / 2


def segre_quot2_theorem(e: BundleData, line: BundleData) -> Fraction:
    """Top Segre number s_(2r+2)(L^[2]) over the length-2 Quot scheme of E."""
    _require_line(line, "segre_quot2_theorem")
    r = e.rank
    i_s2, i_s1s1, i_s1o, i_o2 = _twist_integrals(e, line)
    bracket = ((r * r + 3 * r + 3) * i_s2
               + binom(r + 2, 2) * i_s1s1
               + Fraction(1, 3) * binom(r + 2, 2) * (2 * r + 3) * i_s1o
               + binom(r + 3, 4) * i_o2)
    return (i_s2 ** 2 - bracket) / 2


def segre_quot1(e: BundleData, line: BundleData) -> Fraction:
    """s_(r+1)(L^[1]) over the length-1 Quot scheme: a signed s2 integral."""
    _require_line(line, "segre_quot1")
    i_s2, _, _, _ = _twist_integrals(e, line)
    return (-1) ** (e.rank + 1) * i_s2


def segre_quot1_direct(e: BundleData, line: BundleData) -> Fraction:
    """Same number through P(E): expand s_(r+1) of the line bundle
    p^*L (x) O(1), namely (-1)^(r+1) (zeta + c1 L)^(r+1), and push forward.
    """
    _require_line(line, "segre_quot1_direct")
    r = e.rank
    integrand = zeta_plus_divisor(e, line).power(r + 1).scale((-1) ** (r + 1))
    return integrate_proj(integrand)


def insertion_integral_l1(surface: SurfaceModel, r: int,
                          line1: BundleData, line2: BundleData) -> Fraction:
    """Euler-insertion integral at length 1 over the trivial rank-r bundle.

    Integrates zeta^(r-1) (zeta + c1 L1)(zeta + c1 L2) over P(O^r); all
    positive Segre classes of the trivial bundle vanish, so the value is
    the surface intersection number c1(L1).c1(L2), independent of r.
    """
    if r < 1:
        raise PreconditionError("rank must be positive")
    _require_line(line1, "insertion_integral_l1")
    _require_line(line2, "insertion_integral_l1")
    e = trivial_bundle(surface, r)
    integrand = (ZetaClass.zeta_power(e, r - 1)
                 * zeta_plus_divisor(e, line1)
                 * zeta_plus_divisor(e, line2))
    return integrate_proj(integrand)
