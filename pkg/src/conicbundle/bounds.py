"""Genus bounds for projective curves.

All bounds come back exact (``int`` or ``Fraction``); callers floor them when
comparing with an integer genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

GP_SURFACE_DEGREES = (4, 5, 6)


@dataclass(frozen=True)
class CastelnuovoAuxiliaries:
    m: int
    epsilon: int

    @classmethod
    def of(cls, delta: int, r: int) -> "CastelnuovoAuxiliaries":
        m, epsilon = divmod(delta - 1, r - 1)
        return cls(m, epsilon)


def castelnuovo_bound(delta: int, r: int) -> int:
    """Maximal genus of a nondegenerate irreducible curve of degree ``delta`` in P^r."""
    if r < 2:
        raise ValueError(f"ambient dimension must be at least 2, got {r}")
    if delta < r:
        raise ValueError(f"a curve of degree {delta} cannot span P^{r}")
    aux = CastelnuovoAuxiliaries.of(delta, r)
    m, eps = aux.m, aux.epsilon
    return m * (m - 1) // 2 * (r - 1) + m * eps


def harris_p6_bound(delta: int) -> Fraction:
    """Quadratic genus bound for curves spanning P^6: ``(delta^2 - 7 delta + 12)/10``."""
    if delta < 6:
        raise ValueError(f"delta must be >= 6, got {delta}")
    return harris_p6_quadratic(delta)


def harris_p5_bound(delta: int) -> Fraction:
    """Genus bound for curves in P^5 off quartic surfaces: ``(delta^2 - 5 delta + 10)/10``."""
    if delta < 5:
        raise ValueError(f"delta must be >= 5, got {delta}")
    return harris_p5_quadratic(delta)


def harris_p6_quadratic(delta: int) -> Fraction:
    """Unchecked form of :func:`harris_p6_bound`, for scans over small ``delta``."""
    return Fraction(delta * delta - 7 * delta + 12, 10)


def harris_p5_quadratic(delta: int) -> Fraction:
    return Fraction(delta * delta - 5 * delta + 10, 10)


def gp_residue(d: int, s: int) -> int:
    """The unique ``r`` in ``0..s-1`` with ``d + r`` divisible by ``s``."""
    if s not in (4, 5):
        raise ValueError(f"residue only defined for s in (4, 5), got {s}")
    return -d % s


def gp_bound(d: int, s: int) -> Fraction:
    """Upper bound for ``pi - 1`` of a space curve of degree ``d`` on no surface of degree < ``s``."""
    if s not in GP_SURFACE_DEGREES:
        raise ValueError(f"surface degree must be one of {GP_SURFACE_DEGREES}, got {s}")
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if s == 6:
        return Fraction(d * d, 12) + d
    r = gp_residue(d, s)
    if s == 5:
        return Fraction(d * d, 10) + Fraction(d, 2) - Fraction(2 * r * (5 - r), 5)
    return Fraction(d * d, 8) - Fraction(3 * r * (4 - r), 8)


def plane_curve_genus(delta: int) -> int:
    if delta < 1:
        raise ValueError(f"degree must be positive, got {delta}")
    return (delta - 1) * (delta - 2) // 2
