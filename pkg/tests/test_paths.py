"""Walk counting against an independent brute-force walker and frozen tables."""

import pytest
from hypothesis import given, settings, strategies as st
from math import comb

from hilbpaths.paths import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    LatticePath,
    boundary_crossing_count,
    classify_path,
    closed_form_coefficient,
    count_paths,
    enumerate_paths,
    monomial_to_path,
    path_to_monomial,
    truncate_product,
    verify_path_recursion,
)

from refvalues import (
    EVEN_TABLE,
    ODD_TABLE,
    TRUNCATED_N5_ONE_QUADRIC,
    TRUNCATED_N5_TWO_QUADRICS,
)


def brute_walk_count(n: int, s: int) -> int:
    """Oracle: walk the step tree directly, no DP and no bit tricks.

    Recursively extends a position sequence one step at a time, pruning
    when the walker leaves [0, width], and counts complete walks with
    exactly s left steps. Step 0 and step n+1 are not special-cased; the
    band itself forces them."""
    width = n + 2 - 2 * s
    if s < 0 or width < 0:
        return 0

    def extend(x: int, steps_left: int, lefts_left: int) -> int:
        if steps_left == 0:
            return 1 if x == width and lefts_left == 0 else 0
        total = 0
        if x + 1 <= width:
            total += extend(x + 1, steps_left - 1, lefts_left)
        if x - 1 >= 0 and lefts_left > 0:
            total += extend(x - 1, steps_left - 1, lefts_left - 1)
        return total

    return extend(0, n + 2, s)


class TestCountPaths:
    def test_matches_brute_force(self):
        for n in range(0, 11):
            for s in range(0, n + 2):
                assert count_paths(n, s) == brute_walk_count(n, s), (n, s)

    def test_odd_table(self):
        for n, row in ODD_TABLE.items():
            got = tuple(count_paths(n, s) for s in range(11))
            assert got == row, n

    def test_even_table(self):
        for n, row in EVEN_TABLE.items():
            got = tuple(count_paths(n, s) for s in range(11))
            assert got == row, n

    def test_seed_values(self):
        assert count_paths(-2, 0) == 1
        assert count_paths(-1, 0) == 1
        assert count_paths(-2, 1) == 0
        assert count_paths(-1, 1) == 0
        assert count_paths(-2, -1) == 0

    def test_out_of_domain(self):
        assert count_paths(4, -1) == 0
        assert count_paths(4, 4) == 0  # end column negative
        assert count_paths(4, 3) == 0  # band width zero
        with pytest.raises(ValueError):
            count_paths(-3, 0)

    def test_s_zero_always_one(self):
        for n in range(0, 30):
            assert count_paths(n, 0) == 1

    def test_top_entries(self):
        # widest nonzero s: (n+2)//2 - 1 left steps leave width 2... the
        # last nonzero entry sits at s = (n+1)//2 with value Fibonacci-like
        assert count_paths(13, 7) == 1
        assert count_paths(14, 7) == 128
        assert count_paths(20, 10) == 1024


class TestLatticePath:
    def test_from_left_indices_round_trip(self):
        p = LatticePath.from_left_indices(6, [2, 5])
        assert p.s == 2
        assert p.left_indices == (2, 5)
        assert p.steps[0] == 1 and p.steps[-1] == 1
        m = path_to_monomial(p)
        assert m.indices == (2, 5)
        assert monomial_to_path(m) == p

    def test_positions(self):
        p = LatticePath.from_left_indices(3, [1, 2])
        assert p.positions() == (0, 1, 0, -1, 0, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            LatticePath(3, (1, 1, 1, 1))  # wrong length
        with pytest.raises(ValueError):
            LatticePath(2, (-1, 1, 1, 1))  # first step left
        with pytest.raises(ValueError):
            LatticePath(2, (1, 1, 1, -1))  # last step left
        with pytest.raises(ValueError):
            LatticePath.from_left_indices(3, [0])
        with pytest.raises(ValueError):
            LatticePath.from_left_indices(3, [4])

    def test_classification_examples(self):
        # left steps at 2,4,5,6 on n=12: dips to column -1, never exceeds 6
        r1 = classify_path(LatticePath.from_left_indices(12, [2, 4, 5, 6]))
        assert r1.crosses_left and not r1.crosses_right
        # left steps at 1,5,6,11: stays inside the band entirely
        r2 = classify_path(LatticePath.from_left_indices(12, [1, 5, 6, 11]))
        assert r2.confined


class TestEnumeration:
    def test_unconstrained_count_is_binomial(self):
        for n in range(0, 11):
            for s in range(0, n + 1):
                assert len(list(enumerate_paths(n, s, constrained=False))) == comb(n, s)

    def test_constrained_matches_dp(self):
        for n in range(0, 13):
            for s in range(0, n + 2):
                assert len(list(enumerate_paths(n, s))) == count_paths(n, s), (n, s)

    def test_classification_consistency(self):
        for n in range(0, 11):
            for s in range(0, n + 1):
                for p in enumerate_paths(n, s, constrained=False):
                    rep = classify_path(p)
                    pos = p.positions()
                    assert rep.crosses_left == (min(pos) <= -1)
                    assert rep.crosses_right == (max(pos) >= n + 3 - 2 * s)

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            list(enumerate_paths(40, 20, cap=1000))
        # the error message names the configured bound
        try:
            list(enumerate_paths(40, 20, cap=1000))
        except EnumerationCapError as e:
            assert "1000" in str(e)
        assert DEFAULT_ENUMERATION_CAP == 10_000_000

    def test_lexicographic_order(self):
        lefts = [p.left_indices for p in enumerate_paths(5, 2, constrained=False)]
        assert lefts == sorted(lefts)


class TestCrossingCounts:
    def test_matches_enumeration(self):
        for n in range(0, 13):
            for s in range(0, n + 1):
                left = right = 0
                for p in enumerate_paths(n, s, constrained=False):
                    rep = classify_path(p)
                    left += rep.crosses_left
                    right += rep.crosses_right
                expected = boundary_crossing_count(n, s)
                assert left == expected, (n, s, "left")
                assert right == expected, (n, s, "right")

    def test_inclusion_exclusion_identity(self):
        # confined = all - left - right + both, as sets, for every shape
        for n in range(0, 13):
            for s in range(0, n + 1):
                both = left = right = 0
                for p in enumerate_paths(n, s, constrained=False):
                    rep = classify_path(p)
                    left += rep.crosses_left
                    right += rep.crosses_right
                    both += rep.crosses_left and rep.crosses_right
                assert count_paths(n, s) == comb(n, s) - left - right + both, (n, s)

    def test_small_values(self):
        assert boundary_crossing_count(5, 0) == 0
        assert boundary_crossing_count(5, 1) == 0
        assert boundary_crossing_count(5, 2) == comb(5, 0)
        assert boundary_crossing_count(12, 4) == comb(12, 2)
        assert boundary_crossing_count(4, 4) == comb(4, 4)


class TestClosedForm:
    def test_matches_dp_on_validity_range(self):
        for n in range(0, 41):
            for s in range(0, n // 3 + 2):
                assert closed_form_coefficient(n, s) == count_paths(n, s), (n, s)

    def test_rejects_outside_range(self):
        with pytest.raises(ValueError):
            closed_form_coefficient(9, 5)
        with pytest.raises(ValueError):
            closed_form_coefficient(9, -1)


class TestTruncateProduct:
    def test_frozen_examples(self):
        assert truncate_product(5, [2, 2]) == TRUNCATED_N5_TWO_QUADRICS
        assert truncate_product(5, [2]) == TRUNCATED_N5_ONE_QUADRIC

    def test_zero_coefficient_cuts(self):
        # (1+t)^2 (1-t^2) = 1 + 2t + 0t^2 + ...: the zero already cuts
        assert truncate_product(2, [2]) == [1, 2]

    def test_matches_polynomial_expansion(self):
        from sympy import Poly, symbols

        t = symbols("t")
        for n in (3, 6, 9):
            for degs in ([2, 2], [2], [4, 2], [3, 3]):
                expr = (1 + t) ** n
                for d in degs:
                    expr *= 1 - t**d
                coeffs = Poly(expr.expand(), t).all_coeffs()[::-1]
                expected = []
                for c in coeffs:
                    if c <= 0:
                        break
                    expected.append(int(c))
                assert truncate_product(n, degs) == expected, (n, degs)

    def test_starts_with_one(self):
        for n in range(0, 12):
            assert truncate_product(n, [2, 2])[0] == 1


class TestPathRecursion:
    def test_all_desk_scale(self):
        for k in range(0, 13):
            for s in range(0, k + 3):
                chk = verify_path_recursion(k, s)
                assert chk.ok, (k, s, chk.lhs, chk.rhs)

    def test_reports_sides(self):
        chk = verify_path_recursion(3, 2)
        assert chk.lhs == count_paths(6, 2) == 13
        assert chk.rhs == 13


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=0, max_value=9), st.integers(min_value=0, max_value=9))
def test_count_never_exceeds_binomial(n, s):
    if s <= n:
        assert 0 <= count_paths(n, s) <= comb(n, s)


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=0, max_value=24), st.integers(min_value=0, max_value=13))
def test_count_matches_inclusion_exclusion_in_range(n, s):
    if s <= n // 3 + 1:
        assert count_paths(n, s) == closed_form_coefficient(n, s)
