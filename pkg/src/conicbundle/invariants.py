"""Numerical invariants of a conic bundle S in P^4 and the relations among them.

Notation: ``d`` is the degree of S, ``delta`` the degree of the threefold V
swept out by the planes of the conics (equivalently of the curve C_V in the
Grassmannian), ``g`` the genus of C_V and ``pi`` the sectional genus of S.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .numeric import integer_roots_monic_quadratic

# V of degree 1 is a hyperplane, so S would be degenerate.
MIN_ADMISSIBLE_DELTA = 2


def sectional_genus(d: int, g: int, delta: int) -> int:
    return 1 + d + 2 * g - 2 - delta


def double_point_residual(d: int, g: int, delta: int) -> int:
    """Left-hand side of the double point formula; zero when it holds."""
    return d * d - 9 * d - 8 * (2 * g - 2) + 2 * delta


def singular_fiber_count(d: int, delta: int) -> int:
    """Number of singular points of the conic fibration, ``3d - 4*delta``."""
    return 3 * d - 4 * delta


def euler_characteristic(g: int) -> int:
    """chi(O_S) for a conic bundle over a curve of genus ``g``."""
    return 1 - g


def check_linear_normality(g: int, delta: int) -> bool:
    return delta <= 2 + 3 * g


def check_genus_lower_bound(g: int, delta: int) -> bool:
    """``g - 1 >= delta**2/9 - 5*delta/8`` for ``delta >= 4``, cleared by 72."""
    if delta <= 3:
        return True
    return 72 * (g - 1) >= 8 * delta * delta - 45 * delta


def solve_degree(g: int, delta: int, d_max: Optional[int] = None) -> set[int]:
    """Degrees ``d`` compatible with ``(g, delta)``.

    Positive integer roots of the double point formula, read as a monic
    quadratic in ``d``, that also satisfy ``3d >= 4*delta`` (and ``d <= d_max``
    when given).
    """
    if g < 0 or delta < 1:
        raise ValueError(f"need g >= 0 and delta >= 1, got g={g}, delta={delta}")
    roots = integer_roots_monic_quadratic(-9, 16 - 16 * g + 2 * delta)
    return {
        d
        for d in roots
        if d > 0
        and singular_fiber_count(d, delta) >= 0
        and (d_max is None or d <= d_max)
    }


@dataclass(frozen=True)
class ConicBundleInvariants:
    d: int
    delta: int
    g: int
    pi: int

    @classmethod
    def from_degrees(cls, d: int, delta: int, g: int) -> "ConicBundleInvariants":
        return cls(d, delta, g, sectional_genus(d, g, delta))

    def violations(self, linear_normality: bool = True) -> list[str]:
        """Names of the relations this tuple fails; empty when consistent."""
        d, delta, g, pi = self.d, self.delta, self.g, self.pi
        failed = []
        if d < 1 or delta < 1 or g < 0:
            failed.append("positivity")
        if singular_fiber_count(d, delta) < 0:
            failed.append("singular-fibers")
        if pi != sectional_genus(d, g, delta):
            failed.append("sectional-genus")
        if double_point_residual(d, g, delta) != 0:
            failed.append("double-point")
        if 8 * (pi - 1) != d * d - d - 6 * delta:
            failed.append("sectional-genus-quadratic")
        if linear_normality and not check_linear_normality(g, delta):
            failed.append("linear-normality")
        return failed

    def is_consistent(self, linear_normality: bool = True) -> bool:
        return not self.violations(linear_normality)


def genus_lower_bound(delta: int) -> Fraction:
    """Smallest genus of C_V compatible with the invariants once ``delta >= 4``."""
    return Fraction(delta * delta, 9) - Fraction(5 * delta, 8) + 1
