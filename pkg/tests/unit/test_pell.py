"""Tests for the Pell solvers."""

import time
from math import isqrt

import numpy as np
import pytest
from sympy.solvers.diophantine.diophantine import diop_DN

from deltabound.core.errors import DomainError
from deltabound.core.intmath import is_square, isqrt_array
from deltabound.pell.solvers import (
    PellSolution,
    convergents,
    pell_fundamental,
    pell_general_min_even,
    sqrt_expansion,
)

BRUTE_FORCE_Y = 20_000


def brute_force_min_y(D: int, limit: int = BRUTE_FORCE_Y):
    """Smallest 0 < y ≤ limit with D·y² + 1 a square, or None."""
    ys = np.arange(1, limit + 1, dtype=np.int64)
    values = D * ys * ys + 1
    roots = isqrt_array(values)
    hits = np.nonzero(roots * roots == values)[0]
    return int(ys[hits[0]]) if hits.size else None


class TestPellFundamental:
    """Test x² - D·y² = 1."""

    @pytest.mark.parametrize("D, expected", [(2, (3, 2)), (3, (2, 1)), (5, (9, 4)), (13, (649, 180))])
    def test_small(self, D, expected):
        """Hand-checked fundamental solutions."""
        assert pell_fundamental(D) == PellSolution(*expected)

    def test_brute_force_agreement(self):
        """Every nonsquare D ≤ 1000 agrees with a bounded brute-force search."""
        for D in range(2, 1001):
            if is_square(D):
                continue
            solution = pell_fundamental(D)
            assert solution.residue(D) == 1
            found = brute_force_min_y(D, min(solution.y, BRUTE_FORCE_Y))
            if solution.y <= BRUTE_FORCE_Y:
                assert found == solution.y, D
                assert solution.x == isqrt(D * found * found + 1)
            else:
                assert found is None, D

    def test_matches_sympy(self):
        """The continued fraction agrees with sympy's fundamental solution."""
        for D in (61, 109, 181, 277, 991):
            x, y = min(diop_DN(D, 1))
            assert pell_fundamental(D) == PellSolution(int(x), int(y))

    def test_negative_norm_period(self):
        """Odd periods square the norm -1 solution."""
        # 7² - 2·5² = -1
        assert convergents(2, 3)[-1] == (7, 5)
        assert pell_fundamental(29) == PellSolution(9801, 1820)

    def test_oracle_range_is_fast(self):
        """All nonsquare D ≤ 1000 solve well inside five seconds."""
        pell_fundamental.cache_clear()
        sqrt_expansion.cache_clear()

        start = time.perf_counter()
        solutions = {D: pell_fundamental(D) for D in range(2, 1001) if not is_square(D)}
        elapsed = time.perf_counter() - start

        assert all(s.residue(D) == 1 for D, s in solutions.items())
        assert elapsed < 5.0

    @pytest.mark.parametrize("D", [0, 1, 4, 49, -3])
    def test_domain(self, D):
        """Squares and D < 2 have no fundamental unit."""
        with pytest.raises(DomainError):
            pell_fundamental(D)


class TestGeneralizedPell:
    """Test X² - 4d·Y² = 5 with Y even."""

    def test_square_case_factorization(self):
        """d = 1 only has (3, 1), with odd y."""
        assert pell_general_min_even(1) is None

    @pytest.mark.parametrize("d", [2, 5])
    def test_no_solution(self, d):
        """Small nonsquare cases have no even-y solution."""
        assert pell_general_min_even(d, fallback_bound=10**5) is None

    def test_never_even(self):
        """x² ≡ 5 mod 16 has no solution, so every d up to 200 yields None."""
        assert all(pell_general_min_even(d, fallback_bound=1000) is None for d in range(1, 201))

    def test_domain(self):
        """d must be positive."""
        with pytest.raises(DomainError):
            pell_general_min_even(0)


class TestSqrtExpansion:
    """Test the integer continued-fraction recurrence."""

    @pytest.mark.parametrize(
        "D, expected",
        [(2, (1, (2,))), (3, (1, (1, 2))), (7, (2, (1, 1, 1, 4))), (13, (3, (1, 1, 1, 1, 6)))],
    )
    def test_periods(self, D, expected):
        """Known expansions of √D."""
        assert sqrt_expansion(D) == expected

    def test_palindromic(self):
        """The period minus its last term is a palindrome."""
        for D in range(2, 500):
            if is_square(D):
                continue
            a0, period = sqrt_expansion(D)
            assert period[-1] == 2 * a0
            assert period[:-1] == period[:-1][::-1], D

    @pytest.mark.parametrize("D", [1, 9, 0])
    def test_domain(self, D):
        """Squares have no periodic expansion."""
        with pytest.raises(DomainError):
            sqrt_expansion(D)
