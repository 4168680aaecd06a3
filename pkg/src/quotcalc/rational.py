"""Exact rational scalars: coercion, formatting, and the extended binomial.

Everything downstream computes with `fractions.Fraction`; floats are refused
so no inexactness can leak in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Union[int, str, Fraction]


def rat(x: Rat) -> Fraction:
    """Coerce an int, a "p/q" string, or a Fraction to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def format_rat(x: Fraction) -> str:
    """Render as "p/q", or just "p" when the value is an integer."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def binom(n: Rat, k: int) -> Fraction:
    """Binomial coefficient C(n, k), extended to arbitrary rational n.

    k < 0 gives 0.  Otherwise the falling-factorial definition
    n(n-1)...(n-k+1)/k! is used, which vanishes for integer 0 <= n < k and
    stays meaningful for negative or fractional n.
    """
    if k < 0:
        return Fraction(0)
    top = rat(n)
    num = Fraction(1)
    for i in range(k):
        num *= top - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num / den
