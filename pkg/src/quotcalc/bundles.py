"""Chern and Segre class calculus for bundles on a surface.

The Segre class is the multiplicative inverse of the total Chern class in
the truncated ring, so s1 = -c1 and s2 = c1^2 - c2.  With this convention
the rank-1 specialisation of the Quot-scheme Segre formula reduces exactly
to the classical double-point pattern, which the acceptance suite checks.
"""

from __future__ import annotations

from .chow import BundleData, GradedClass, line_bundle
from .errors import PreconditionError
from .rational import binom

__all__ = ["chern_total", "segre_total", "twist_bundle", "dual_line"]


def chern_total(e: BundleData) -> GradedClass:
    """Total Chern class 1 + c1 + c2 of the bundle."""
    return GradedClass(e.surface, 1, e.c1, e.c2int)


def segre_total(e: BundleData) -> GradedClass:
    """Total Segre class: inverse of chern_total, truncated at degree 2."""
    s = e.surface
    s1 = tuple(-a for a in e.c1)
    s2 = s.pair(e.c1, e.c1) - e.c2int
    return GradedClass(s, 1, s1, s2)


def twist_bundle(e: BundleData, line: BundleData) -> BundleData:
    """Tensor a rank-r bundle with an invertible sheaf.

    c1 gains r copies of c1(L); the c2 number picks up the standard
    (r-1) c1(E)c1(L) + C(r,2) c1(L)^2 correction.
    """
    if line.rank != 1:
        raise PreconditionError(
            f"twist requires a rank-1 bundle, got rank {line.rank}")
    if e.surface != line.surface:
        raise PreconditionError("twist operands live on different surfaces")
    r = e.rank
    c1 = tuple(a + r * b for a, b in zip(e.c1, line.c1))
    c2 = (e.c2int
          + (r - 1) * e.surface.pair(e.c1, line.c1)
          + binom(r, 2) * e.surface.pair(line.c1, line.c1))
    return BundleData(e.surface, r, c1, c2)


def dual_line(line: BundleData) -> BundleData:
    """Inverse of an invertible sheaf (negated c1)."""
    if line.rank != 1:
        raise PreconditionError(
            f"dual_line requires a rank-1 bundle, got rank {line.rank}")
    return line_bundle(line.surface, tuple(-a for a in line.c1))
