from fractions import Fraction

import oracles
import pytest

from conicbundle import cases
from conicbundle.cases import (
    CandidateSolution,
    ScrollCurveClass,
    enumerate_cone_case,
    enumerate_cubic_scroll,
    enumerate_elliptic_cone,
    enumerate_endgame,
    enumerate_p5_span,
    enumerate_quartic_scroll,
    enumerate_veronese,
    scroll_genus,
)
from conicbundle.invariants import solve_degree


def _scroll_rows(found):
    return sorted(c.key + (c.class_data["alpha"], c.class_data["beta"]) for c in found)


@pytest.mark.parametrize(
    "scroll_degree, alpha, beta, genus",
    [(4, 3, -1, 8), (4, 6, 2, 65), (3, 1, 0, 0)],
)
def test_scroll_genus(scroll_degree, alpha, beta, genus):
    assert scroll_genus(ScrollCurveClass(scroll_degree, alpha, beta)) == genus


def test_scroll_genus_always_integral():
    assert scroll_genus(ScrollCurveClass(3, 1, 1)) == 0
    for e, floor in ((3, 1), (4, 2)):
        for alpha in range(0, 16):
            for beta in range(-floor * alpha, 32):
                if e * alpha + beta >= 1:
                    assert scroll_genus(ScrollCurveClass(e, alpha, beta)).denominator == 1


def test_scroll_class_constraints():
    with pytest.raises(ValueError):
        ScrollCurveClass(3, 2, -3)
    with pytest.raises(ValueError):
        ScrollCurveClass(4, 2, -5)
    with pytest.raises(ValueError):
        ScrollCurveClass(5, 1, 0)
    with pytest.raises(ValueError):
        ScrollCurveClass(4, 0, 0)
    assert ScrollCurveClass(4, 3, -1).label == "3E-F"
    assert ScrollCurveClass(4, 6, 2).label == "6E+2F"
    assert ScrollCurveClass(3, 2, 0).delta == 6


def test_candidate_checks_invariants_on_emission():
    with pytest.raises(AssertionError):
        CandidateSolution(7, 2, 0, 4, "test")


# -- cubic scroll -------------------------------------------------------------

def test_cubic_scroll_empty():
    assert enumerate_cubic_scroll(4, 31) == []
    assert enumerate_cubic_scroll(4, 3) == []


def test_cubic_scroll_empty_without_filters():
    assert oracles.scroll_raw(3, 4, 31) == []


def test_cubic_scroll_matches_oracle():
    assert _scroll_rows(enumerate_cubic_scroll()) == sorted(oracles.scroll(3))


# -- quartic scroll -----------------------------------------------------------

def test_quartic_scroll_two_classes():
    found = enumerate_quartic_scroll(4, 31)
    assert [c.key for c in found] == [(15, 11, 8, 19), (36, 26, 65, 139)]
    assert [c.class_data["label"] for c in found] == ["3E-F", "6E+2F"]
    assert all(3 * c.d - 4 * c.delta >= 0 for c in found)


def test_quartic_scroll_matches_oracle():
    assert _scroll_rows(enumerate_quartic_scroll()) == sorted(oracles.scroll(4))


def test_quartic_scroll_low_genus_fails_anyway():
    raw = [row for row in oracles.scroll_raw(4, 4, 31) if row[2] <= 1]
    survivors = [row for row in raw if 3 * row[0] >= 4 * row[1]]
    assert survivors == []


def test_quartic_scroll_unfiltered_solutions_need_remaining_filters():
    # without the remaining filters, extra solutions appear; they all fail 3d >= 4 delta
    raw = oracles.scroll_raw(4, 4, 31, d_hi=42)
    extra = [r for r in raw if (r[3], r[4]) not in {(3, -1), (6, 2)}]
    assert extra
    assert all(3 * r[0] < 4 * r[1] for r in extra)


# -- veronese -----------------------------------------------------------------

def test_veronese_empty():
    assert enumerate_veronese(31) == []
    assert enumerate_veronese() == oracles.veronese() == []


def test_veronese_a4_intermediate():
    assert solve_degree(3, 8) == set()


# -- elliptic cone ------------------------------------------------------------

def test_elliptic_cone_only_alpha_one():
    found = enumerate_elliptic_cone(31)
    assert found
    assert {c.class_data["alpha"] for c in found} == {1}
    assert [c.key for c in found] == [(8, 4, 1, 5)]


def test_elliptic_cone_intermediates():
    assert solve_degree(5, 8) == set()
    assert solve_degree(1, 4) == {8}


def test_elliptic_cone_matches_oracle():
    ours = sorted(c.key + (c.class_data["alpha"], c.class_data["branch"]) for c in enumerate_elliptic_cone())
    assert ours == sorted(oracles.elliptic_cone())


# -- cone case ----------------------------------------------------------------

def test_cone_case_branches():
    result = enumerate_cone_case(31)
    assert result.survivors_odd == []
    assert [(c.d, c.delta, c.g) for c in result.survivors_even] == [
        (2 * delta, delta, (delta - 2) ** 2 // 4) for delta in range(4, 32, 2)
    ]
    assert (8, 4, 1, 5) in [c.key for c in result.survivors_even]


def test_cone_case_odd_branch_reasons():
    # delta = 4, d = 9 gives 2g - 2 = 1
    assert Fraction(16, 2) - Fraction(12, 2) - 1 == 1
    # delta = 5, d = 11 gives g = 3 above the space-curve bound 2
    assert oracles.residual(11, 3, 5) == 0
    assert oracles.castelnuovo_p3(5) == 2


def test_cone_case_matches_oracle():
    result = enumerate_cone_case()
    even, odd = oracles.cone()
    assert [c.key for c in result.survivors_even] == even
    assert [c.key for c in result.survivors_odd] == odd


# -- p5 span ------------------------------------------------------------------

def test_p5_span_empty():
    assert enumerate_p5_span(11) == []
    assert enumerate_p5_span() == oracles.p5_span() == []


def test_p5_span_intermediate():
    assert solve_degree(6, 10) == set()


def test_p5_span_range_enforced():
    with pytest.raises(ValueError):
        enumerate_p5_span(13)


# -- endgame ------------------------------------------------------------------

def test_endgame():
    assert [c.key for c in enumerate_endgame()] == [(4, 2, 0, 1), (5, 2, 0, 2), (8, 4, 1, 5)]


def test_endgame_matches_oracle():
    assert [c.key for c in enumerate_endgame()] == oracles.endgame()


def test_endgame_filter_reasons():
    assert 3 > 2 + 3 * 0  # g = 0, delta = 3 fails linear normality
    assert solve_degree(1, 5) == set()


# -- shared -------------------------------------------------------------------

@pytest.mark.parametrize("case", cases.CASES)
def test_every_survivor_is_consistent(case):
    for c in cases.run_enumerator(case):
        assert c.invariants.is_consistent()


def test_survivors_beyond_certified_range_are_flagged():
    found = enumerate_quartic_scroll(delta_max=60, d_max=200)
    beyond = [c for c in found if c.delta > 31]
    assert beyond
    assert all(not c.certified for c in beyond)
    assert all(c.certified for c in found if c.delta <= 31)


def test_shrunk_range_drops_the_large_class():
    assert [c.key for c in enumerate_quartic_scroll(delta_max=25)] == [(15, 11, 8, 19)]


def test_run_enumerator_unknown_case():
    with pytest.raises(ValueError):
        cases.run_enumerator("plane")


def test_span_scans():
    assert cases.span_p6_max_delta() == 2
    assert cases.span_p5_max_delta() == 11
