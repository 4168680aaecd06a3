"""Truncated power series and Euler-characteristic generating series.

The generating series of Euler characteristics of the length-l Quot schemes
of a rank-r bundle is the eta-type product

    prod_(m >= 1) (1 - q^m)^(-a),    a = r * chi(S),

expanded here with exact rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .rational import Rat, binom, rat

__all__ = ["PowerSeries", "one_minus_q_power", "eta_power_expand",
           "quot_euler_series"]


@dataclass(frozen=True)
class PowerSeries:
    """Rational coefficients c_0 .. c_N of a series truncated at order N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise PreconditionError("a series needs at least the q^0 term")
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries((Fraction(1),) + (Fraction(0),) * order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i]
                                 for i in range(n + 1)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        """Truncated Cauchy product, at the smaller of the two orders."""
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(tuple(out))


def one_minus_q_power(exponent: Rat, order: int, step: int = 1) -> PowerSeries:
    """(1 - q^step)^exponent up to q^order, exponent any rational."""
    if order < 0:
        raise PreconditionError("order must be >= 0")
    a = rat(exponent)
    out = [Fraction(0)] * (order + 1)
    for j in range(order // step + 1):
        out[j * step] = binom(a, j) * (-1) ** j
    return PowerSeries(tuple(out))


def eta_power_expand(exponent: Rat, order: int) -> PowerSeries:
    """Coefficients of prod_(m=1..N) (1 - q^m)^(-exponent) up to q^N."""
    if order < 0:
        raise PreconditionError("order must be >= 0")
    a = rat(exponent)
    series = PowerSeries.one(order)
    for m in range(1, order + 1):
        series = series * one_minus_q_power(-a, order, step=m)
    return series


def quot_euler_series(chi: Rat, r: int, order: int) -> PowerSeries:
    """Generating series of Euler characteristics of the Quot schemes.

    The q^l coefficient is the Euler characteristic of the length-l Quot
    scheme of a rank-r bundle on a surface with Euler characteristic chi.
    """
    if r < 1:
        raise PreconditionError("rank must be positive")
    return eta_power_expand(r * rat(chi), order)
