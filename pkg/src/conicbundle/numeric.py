"""Exact integer and rational primitives.

Everything downstream compares bounds with fractional coefficients, so all
arithmetic goes through :class:`fractions.Fraction`, which is always kept in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are refused."""
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"exact int or Fraction required, got {type(x).__name__}")
    return Fraction(x)


def exact_isqrt(n: int) -> Optional[int]:
    """Return ``r`` with ``r * r == n``, or None when ``n`` is not a square."""
    if n < 0:
        raise ValueError(f"exact_isqrt of negative number {n}")
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num = exact_isqrt(q.numerator)
    den = exact_isqrt(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def integer_roots_monic_quadratic(b: RationalLike, c: RationalLike) -> set[int]:
    """Integer solutions of ``x**2 + b*x + c == 0``.

    Solved through the discriminant: a rational root exists only when
    ``b**2 - 4c`` is the square of a rational, and then each of the two
    candidate roots is kept iff it is integral.
    """
    b, c = as_rational(b), as_rational(c)
    root = rational_sqrt(b * b - 4 * c)
    if root is None:
        return set()
    roots = set()
    for x in ((-b + root) / 2, (-b - root) / 2):
        if x.denominator == 1:
            roots.add(int(x))
    return roots


def floor_rational(q: RationalLike) -> int:
    q = as_rational(q)
    return q.numerator // q.denominator


def format_rational(q: RationalLike) -> str:
    """Integers print bare, everything else as a reduced ``p/q``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
