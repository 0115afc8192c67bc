"""Upper bound for the degree of a conic bundle not lying on a cubic.

Three hypersurface cases (no quintic / quintic but no quartic / quartic),
each combining a Gruson-Peskine type genus bound for the hyperplane section
with the invariant relations.  Every case is settled by an exact scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import gp_bound, gp_residue
from .numeric import floor_rational

# Each case only applies above its threshold degree.
CASE1_MIN_DEGREE = 26  # not on a quintic, d > 25
CASE2_MIN_DEGREE = 18  # on a quintic, not a quartic, d > 17
CASE3_MIN_DEGREE = 11  # on a quartic, d > 10

CASE2_GAMMA_RANGE = (18, 47)
SCAN_LIMIT = 200


@dataclass(frozen=True)
class GammaDatum:
    d: int
    r: int
    gamma_max: int


@dataclass(frozen=True)
class BFInequality:
    case_tag: str
    lhs: Fraction
    rhs: Fraction

    @property
    def feasible(self) -> bool:
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class Case2Result:
    a_priori_max: int
    gamma_max: int
    max_degree: int


@dataclass(frozen=True)
class GlobalBounds:
    d_max: int
    delta_max: int


def _largest(pred, lo: int, hi: int) -> int | None:
    found = None
    for d in range(lo, hi + 1):
        if pred(d):
            found = d
    return found


def min_sectional_genus_minus_one(d: int) -> Fraction:
    """Smallest value of ``pi - 1`` allowed by the invariants, using ``delta <= 3d/4``."""
    return Fraction(d * d - d, 8) - Fraction(3, 4) * Fraction(3 * d, 4)


def max_euler_characteristic(d: int) -> Fraction:
    """``chi(O_S) = -d^2/16 + 9d/16 - delta/8``, maximised at ``delta = 0``."""
    return Fraction(-d * d, 16) + Fraction(9 * d, 16)


# -- case 1: not on a quintic -------------------------------------------------

def case1_feasible(d: int) -> bool:
    return min_sectional_genus_minus_one(d) <= gp_bound(d, 6)


def case1_max_degree(scan_limit: int = SCAN_LIMIT) -> int:
    return _largest(case1_feasible, CASE1_MIN_DEGREE, scan_limit)


# -- case 2: on a quintic, not on a quartic -----------------------------------

def gamma_bound_quintic(d: int) -> Fraction:
    return Fraction(d * (95 - 2 * d), 80)


def gamma_datum_quintic(d: int) -> GammaDatum:
    return GammaDatum(d, gp_residue(d, 5), floor_rational(gamma_bound_quintic(d)))


def bf_quintic(d: int, chi: Fraction, gamma: int) -> BFInequality:
    lhs = Fraction(d**3, 150) - Fraction(d, 6)
    rhs = chi + Fraction(gamma * gamma, 2) + gamma * (Fraction(d, 5) + Fraction(5, 2))
    return BFInequality("quintic", lhs, rhs)


def case2_feasible(d: int, gamma: int) -> bool:
    return bf_quintic(d, max_euler_characteristic(d), gamma).feasible


def case2_analysis(scan_limit: int = SCAN_LIMIT) -> Case2Result:
    a_priori = _largest(lambda d: gamma_bound_quintic(d) >= 0, 1, scan_limit)
    lo, hi = CASE2_GAMMA_RANGE
    # The range end is the a-priori cutoff; the scan confirms it is 47.
    hi = min(hi, a_priori)
    gamma_max = max(gamma_datum_quintic(d).gamma_max for d in range(lo, hi + 1))
    max_degree = _largest(lambda d: case2_feasible(d, gamma_max), lo, hi)
    return Case2Result(a_priori, gamma_max, max_degree)


# -- case 3: on a quartic -----------------------------------------------------

def gamma_bound_quartic(d: int, delta: Fraction | int | None = None) -> Fraction:
    """``gamma <= d/8 + 3 delta/4``; without ``delta`` the worst case ``11d/16``."""
    if delta is None:
        return Fraction(11 * d, 16)
    return Fraction(d, 8) + Fraction(3, 4) * delta


def bf_quartic(d: int, chi: Fraction, gamma: Fraction | int) -> BFInequality:
    lhs = Fraction(d**3, 96) - Fraction(d * d, 16) - Fraction(d, 24) + Fraction(5, 4)
    rhs = chi + Fraction(gamma) ** 2 / 2 + gamma * (Fraction(d, 4) + Fraction(3, 2))
    return BFInequality("quartic", lhs, rhs)


def case3_polynomial(d: int) -> Fraction:
    return (
        Fraction(d**3, 96)
        - Fraction(209 * d * d, 512)
        - Fraction(157 * d, 96)
        + Fraction(5, 4)
    )


def case3_feasible(d: int) -> bool:
    return case3_polynomial(d) <= 0


def case3_max_degree(scan_limit: int = SCAN_LIMIT) -> int:
    return _largest(case3_feasible, CASE3_MIN_DEGREE, scan_limit)


def global_bounds(scan_limit: int = SCAN_LIMIT) -> GlobalBounds:
    d_max = max(
        case1_max_degree(scan_limit),
        case2_analysis(scan_limit).max_degree,
        case3_max_degree(scan_limit),
        CASE1_MIN_DEGREE - 1,
        CASE2_MIN_DEGREE - 1,
        CASE3_MIN_DEGREE - 1,
    )
    return GlobalBounds(d_max, floor_rational(Fraction(3 * d_max, 4)))
