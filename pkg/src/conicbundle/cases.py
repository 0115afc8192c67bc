"""Exhaustive enumerators for each geometric branch of the classification.

Each enumerator walks a finite parameter box, derives ``(delta, g)`` for the
curve C_V from the branch's own genus formula, solves the double point
formula for ``d`` and keeps whatever passes the standard filters.  Branch
survivors of genus 0 or 1 are left to :func:`enumerate_endgame`, except in
the two cone branches, whose survivors are reported as found.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional

from . import degree_bound
from .bounds import (
    castelnuovo_bound,
    harris_p5_bound,
    harris_p5_quadratic,
    harris_p6_quadratic,
    plane_curve_genus,
)
from .invariants import (
    MIN_ADMISSIBLE_DELTA,
    ConicBundleInvariants,
    check_genus_lower_bound,
    check_linear_normality,
    genus_lower_bound,
    sectional_genus,
    singular_fiber_count,
    solve_degree,
)
from .numeric import floor_rational

# Quadric and cubic hypersurfaces are covered by classification results.
GEOMETRIC_DELTA_MIN = 4
P5_SPAN_DELTA_MIN = 5
P5_SPAN_DELTA_MAX = 11

CASES = (
    "cone",
    "cubic-scroll",
    "quartic-scroll",
    "veronese",
    "elliptic-cone",
    "p5-span",
    "endgame",
)


@lru_cache(maxsize=None)
def certified_bounds() -> degree_bound.GlobalBounds:
    return degree_bound.global_bounds()


@dataclass(frozen=True)
class ScrollCurveClass:
    scroll_degree: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.scroll_degree not in (3, 4):
            raise ValueError(f"scroll degree must be 3 or 4, got {self.scroll_degree}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        floor_beta = -self.alpha if self.scroll_degree == 3 else -2 * self.alpha
        if self.beta < floor_beta:
            raise ValueError(f"beta must be >= {floor_beta}, got {self.beta}")
        if self.delta < 1:
            raise ValueError(f"class {self.label} has nonpositive degree")

    @property
    def delta(self) -> int:
        return self.scroll_degree * self.alpha + self.beta

    @property
    def label(self) -> str:
        if self.beta == 0:
            return f"{self.alpha}E"
        sign = "+" if self.beta > 0 else "-"
        coeff = "" if abs(self.beta) == 1 else str(abs(self.beta))
        return f"{self.alpha}E{sign}{coeff}F"


@dataclass(frozen=True)
class CandidateSolution:
    d: int
    delta: int
    g: int
    pi: int
    provenance: str
    class_data: Optional[dict[str, Any]] = field(default=None, hash=False)
    certified: bool = True

    def __post_init__(self):
        failed = self.invariants.violations()
        if failed:
            raise AssertionError(f"emitted candidate {self.key} violates {failed}")

    @property
    def invariants(self) -> ConicBundleInvariants:
        return ConicBundleInvariants(self.d, self.delta, self.g, self.pi)

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.d, self.delta, self.g, self.pi)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ConeCaseResult:
    survivors_even: list[CandidateSolution]
    survivors_odd: list[CandidateSolution]


def scroll_genus(c: ScrollCurveClass) -> Fraction:
    a, b = c.alpha, c.beta
    if c.scroll_degree == 3:
        twice_g_minus_2 = 3 * a * a - 5 * a + 2 * a * b - 2 * b
    else:
        twice_g_minus_2 = 4 * a * a - 6 * a + 2 * a * b - 2 * b
    return 1 + Fraction(twice_g_minus_2, 2)


def _integral_genus(g: Fraction) -> Optional[int]:
    if g.denominator != 1 or g < 0:
        return None
    return int(g)


def _admissible_degrees(g: int, delta: int, d_max: Optional[int]) -> list[int]:
    if not check_linear_normality(g, delta) or not check_genus_lower_bound(g, delta):
        return []
    return sorted(solve_degree(g, delta, d_max))


def _candidates(g, delta, d_max, provenance, class_data, delta_certified):
    return [
        CandidateSolution(
            d,
            delta,
            g,
            sectional_genus(d, g, delta),
            provenance,
            class_data,
            certified=delta <= delta_certified,
        )
        for d in _admissible_degrees(g, delta, d_max)
    ]


def _resolve(delta_max: Optional[int], d_max: Optional[int]) -> tuple[int, int]:
    bounds = certified_bounds()
    return (
        bounds.delta_max if delta_max is None else delta_max,
        bounds.d_max if d_max is None else d_max,
    )


def _enumerate_scroll(scroll_degree, delta_min, delta_max, d_max, provenance):
    delta_max, d_max = _resolve(delta_max, d_max)
    delta_certified = certified_bounds().delta_max
    beta_floor = 1 if scroll_degree == 3 else 2
    found = []
    # delta >= (scroll_degree - beta_floor) * alpha = 2 * alpha on both scrolls
    for alpha in range(delta_max // 2 + 1):
        lo = max(-beta_floor * alpha, delta_min - scroll_degree * alpha)
        for beta in range(lo, delta_max - scroll_degree * alpha + 1):
            c = ScrollCurveClass(scroll_degree, alpha, beta)
            g = _integral_genus(scroll_genus(c))
            if g is None or g <= 1:
                continue
            class_data = {
                "scroll_degree": scroll_degree,
                "alpha": alpha,
                "beta": beta,
                "label": c.label,
            }
            found += _candidates(g, c.delta, d_max, provenance, class_data, delta_certified)
    return found


def enumerate_cubic_scroll(
    delta_min: int = GEOMETRIC_DELTA_MIN,
    delta_max: Optional[int] = None,
    d_max: Optional[int] = None,
) -> list[CandidateSolution]:
    """C_V of class alpha*E + beta*F on a cubic scroll in P^4."""
    return _enumerate_scroll(3, delta_min, delta_max, d_max, "cubic-scroll")


def enumerate_quartic_scroll(
    delta_min: int = GEOMETRIC_DELTA_MIN,
    delta_max: Optional[int] = None,
    d_max: Optional[int] = None,
) -> list[CandidateSolution]:
    """C_V of class alpha*E + beta*F on a rational quartic scroll in P^5."""
    return _enumerate_scroll(4, delta_min, delta_max, d_max, "quartic-scroll")


def enumerate_veronese(
    delta_max: Optional[int] = None, d_max: Optional[int] = None
) -> list[CandidateSolution]:
    """C_V the image of a plane curve of degree ``a`` under the conic embedding."""
    delta_max, d_max = _resolve(delta_max, d_max)
    delta_certified = certified_bounds().delta_max
    found = []
    for a in range(2, delta_max // 2 + 1):
        delta = 2 * a
        if delta < GEOMETRIC_DELTA_MIN:
            continue
        g = _integral_genus(1 + Fraction(a * (a - 3), 2))
        if g is None or g <= 1:
            continue
        found += _candidates(g, delta, d_max, "veronese", {"a": a}, delta_certified)
    return found


def enumerate_elliptic_cone(
    delta_max: Optional[int] = None, d_max: Optional[int] = None
) -> list[CandidateSolution]:
    """C_V on a cone over an elliptic quartic curve, through the vertex or not.

    Survivors are returned whatever their genus; those with ``g <= 1`` are
    the ones handed on to the endgame.
    """
    delta_max, d_max = _resolve(delta_max, d_max)
    delta_certified = certified_bounds().delta_max
    found = []
    alpha = 1
    while 4 * alpha <= delta_max:
        branches = (
            ("vertex", 4 * alpha + 1, 2 * (2 * alpha + 1) * (alpha - 1)),
            ("no-vertex", 4 * alpha, 4 * alpha * (alpha - 1)),
        )
        for branch, delta, twice_g_minus_2 in branches:
            if delta > delta_max:
                continue
            g = _integral_genus(1 + Fraction(twice_g_minus_2, 2))
            if g is None:
                continue
            class_data = {"alpha": alpha, "branch": branch}
            found += _candidates(g, delta, d_max, "elliptic-cone", class_data, delta_certified)
        alpha += 1
    return found


def enumerate_cone_case(delta_max: Optional[int] = None) -> ConeCaseResult:
    """V a cone: ``d = 2 delta`` or ``d = 2 delta + 1``, filtered by genus bounds.

    No degree cap is applied here; the branch is parametrised by ``delta``.
    """
    delta_max, _ = _resolve(delta_max, None)
    delta_certified = certified_bounds().delta_max
    even, odd = [], []
    for delta in range(3, delta_max + 1):
        branches = (
            (even, 2 * delta, Fraction(delta * delta, 2) - 2 * delta),
            (odd, 2 * delta + 1, Fraction(delta * delta, 2) - Fraction(3 * delta, 2) - 1),
        )
        for bucket, d, twice_g_minus_2 in branches:
            g = _integral_genus(1 + twice_g_minus_2 / 2)
            if g is None:
                continue
            if singular_fiber_count(d, delta) < 0:
                continue
            if not check_linear_normality(g, delta) or not check_genus_lower_bound(g, delta):
                continue
            if g > castelnuovo_bound(delta, 3) or g > plane_curve_genus(delta):
                continue
            bucket.append(
                CandidateSolution(
                    d,
                    delta,
                    g,
                    sectional_genus(d, g, delta),
                    "cone",
                    {"branch": "d=2delta" if d == 2 * delta else "d=2delta+1"},
                    certified=delta <= delta_certified,
                )
            )
    return ConeCaseResult(even, odd)


def enumerate_p5_span(
    delta_max: int = P5_SPAN_DELTA_MAX, d_max: Optional[int] = None
) -> list[CandidateSolution]:
    """C_V spanning P^5 and lying on no quartic surface, for ``delta <= 11``."""
    if delta_max > P5_SPAN_DELTA_MAX:
        raise ValueError(
            f"the P^5 span branch is only open for delta <= {P5_SPAN_DELTA_MAX}, got {delta_max}"
        )
    _, d_max = _resolve(None, d_max)
    found = []
    for delta in range(P5_SPAN_DELTA_MIN, delta_max + 1):
        for g in range(2, floor_rational(harris_p5_bound(delta)) + 1):
            found += _candidates(g, delta, d_max, "p5-span", None, P5_SPAN_DELTA_MAX)
    return found


def enumerate_endgame() -> list[CandidateSolution]:
    """Rational or elliptic C_V, where the genus lower bound leaves ``2 <= delta <= 5``."""
    found = []
    for g in (0, 1):
        for delta in range(MIN_ADMISSIBLE_DELTA, 6):
            found += _candidates(g, delta, None, "endgame", None, 5)
    return sorted(found, key=lambda c: c.key)


def run_enumerator(case: str, delta_max: Optional[int] = None) -> list[CandidateSolution]:
    """Dispatch by case name; the cone case returns both branches concatenated."""
    if case == "cone":
        result = enumerate_cone_case(delta_max)
        return result.survivors_even + result.survivors_odd
    if case == "cubic-scroll":
        return enumerate_cubic_scroll(delta_max=delta_max)
    if case == "quartic-scroll":
        return enumerate_quartic_scroll(delta_max=delta_max)
    if case == "veronese":
        return enumerate_veronese(delta_max)
    if case == "elliptic-cone":
        return enumerate_elliptic_cone(delta_max)
    if case == "p5-span":
        return enumerate_p5_span(P5_SPAN_DELTA_MAX if delta_max is None else delta_max)
    if case == "endgame":
        if delta_max is not None:
            raise ValueError("the endgame range is fixed; --delta-max does not apply")
        return enumerate_endgame()
    raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")


def _largest_delta(bound, scan_limit: int) -> int:
    return max(
        (delta for delta in range(1, scan_limit + 1) if bound(delta) >= genus_lower_bound(delta)),
        default=0,
    )


def span_p6_max_delta(scan_limit: int = 200) -> int:
    """Largest ``delta`` for which a curve spanning P^6 can meet the genus lower bound."""
    return _largest_delta(harris_p6_quadratic, scan_limit)


def span_p5_max_delta(scan_limit: int = 200) -> int:
    """Same, for curves spanning P^5 that lie on no quartic surface."""
    return _largest_delta(harris_p5_quadratic, scan_limit)
