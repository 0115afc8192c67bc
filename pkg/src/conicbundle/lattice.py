"""Intersection numbers on the rank-two sublattice spanned by H and f.

H is the hyperplane class of S and f the class of a fibre conic.  The
canonical class never appears as a lattice vector: it is carried only as the
pair of numbers K.H and K.f, which is all adjunction needs here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import castelnuovo_bound


@dataclass(frozen=True)
class DivisorClass:
    a: int  # coefficient of H
    b: int  # coefficient of f

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.a, k * self.b)


H = DivisorClass(1, 0)
FIBER = DivisorClass(0, 1)


@dataclass(frozen=True)
class SurfaceLattice:
    d: int
    pi: int

    @property
    def k_dot_h(self) -> int:
        return 2 * self.pi - 2 - self.d

    @property
    def k_dot_f(self) -> int:
        return -2

    def degree(self, x: DivisorClass) -> int:
        return intersect(self, x, H)


@dataclass(frozen=True)
class ResidualCurve:
    degree: int
    p_a: int


def intersect(lattice: SurfaceLattice, x: DivisorClass, y: DivisorClass) -> int:
    return x.a * y.a * lattice.d + 2 * (x.a * y.b + x.b * y.a)


def k_dot(lattice: SurfaceLattice, x: DivisorClass) -> int:
    return x.a * lattice.k_dot_h + x.b * lattice.k_dot_f


def arithmetic_genus(lattice: SurfaceLattice, x: DivisorClass) -> Fraction:
    return 1 + Fraction(intersect(lattice, x, x) + k_dot(lattice, x), 2)


def residual_curve(lattice: SurfaceLattice, k: int) -> ResidualCurve:
    """Degree and arithmetic genus of ``H - k f``, a hyperplane section minus ``k`` conics."""
    if k < 0 or 2 * k > lattice.d:
        raise ValueError(f"cannot remove {k} conics from a section of degree {lattice.d}")
    a = H - k * FIBER
    p_a = arithmetic_genus(lattice, a)
    if p_a.denominator != 1:
        raise ValueError(f"non-integral arithmetic genus {p_a} for H - {k}f")
    return ResidualCurve(lattice.degree(a), int(p_a))


def residual_impossible(degree: int, p_a: int) -> bool:
    """True when ``p_a`` exceeds the maximal genus of a degree-``degree`` curve in P^3."""
    return p_a > castelnuovo_bound(degree, 3)
