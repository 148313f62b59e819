"""Tests for the K3 and Enriques s-invariants."""

from fractions import Fraction

import pytest

from deltabound.core.errors import DomainError
from deltabound.pell.k3 import (
    SBranch,
    SValue,
    enriques_bound,
    enriques_exponent,
    enriques_s_from_phi,
    k3_bound_holds,
    k3_exponent,
    k3_s_invariant,
)
from deltabound.pell.solvers import PellSolution


class TestSValue:
    """Test exact values of the form c/√n."""

    def test_square_radicand_collapses(self):
        """1/√4 is the rational 1/2."""
        value = SValue.inv_sqrt(4)

        assert value.is_rational
        assert value.exact() == Fraction(1, 2)
        assert str(value) == "1/2"

    def test_irrational(self):
        """1/√7 stays symbolic."""
        value = SValue.inv_sqrt(7)

        assert not value.is_rational
        assert value.squared() == Fraction(1, 7)
        assert value.symbolic() == ("inv_sqrt", 7)
        assert str(value.scale(4)) == "4/sqrt(7)"
        with pytest.raises(DomainError):
            value.exact()


class TestK3SInvariant:
    """Test the Pell case split."""

    def test_d1(self):
        """d = 1 is a square: s = 1."""
        result = k3_s_invariant(1)

        assert result.branch == SBranch.SQUARE_D
        assert result.value.exact() == 1
        assert result.witness is None

    def test_d2(self):
        """d = 2 uses the unit (3, 2): s = 3/4."""
        result = k3_s_invariant(2)

        assert result.branch == SBranch.PELL_UNIT
        assert result.value.exact() == Fraction(3, 4)
        assert result.witness == PellSolution(3, 2)
        assert result.bound_ok
        assert result.sub_bound_ok

    def test_d3_is_tight(self):
        """(2/3)² = 1/3 + 1/9 exactly."""
        result = k3_s_invariant(3)

        assert result.value.exact() == Fraction(2, 3)
        assert result.value.squared() == Fraction(1, 3) + Fraction(1, 9)
        assert result.sub_bound_ok

    def test_d4(self):
        """d = 4 is a square: s = 1/2."""
        result = k3_s_invariant(4)

        assert result.branch == SBranch.SQUARE_D
        assert result.value.exact() == Fraction(1, 2)
        assert result.delta_upper == result.value

    def test_bound_holds(self):
        """s² ≤ 4/d + 5/d² for the first few hundred degrees."""
        for d in range(1, 301):
            result = k3_s_invariant(d, fallback_bound=1000)
            assert result.bound_ok, d
            if result.branch == SBranch.PELL_UNIT:
                assert result.sub_bound_ok, d

    def test_bound_check_is_exact(self):
        """The comparison is on integers, equality included."""
        assert k3_bound_holds(SValue(Fraction(3)), 1)
        assert not k3_bound_holds(SValue(Fraction(4)), 1)

    @pytest.mark.parametrize("d", [0, -2])
    def test_domain(self, d):
        """d must be positive."""
        with pytest.raises(DomainError):
            k3_s_invariant(d)


class TestK3Exponent:
    """Test 4·s(S, H)."""

    @pytest.mark.parametrize("d, exponent", [(1, 4), (2, 3), (4, 2)])
    def test_values(self, d, exponent):
        """Exponent and bound check."""
        value, ok = k3_exponent(d)

        assert value.exact() == exponent
        assert ok


class TestEnriques:
    """Test the unnodal Enriques bound."""

    def test_formula(self):
        """2/(k+2) for k = 1..100."""
        for k in range(1, 101):
            assert enriques_bound(k) == Fraction(2, k + 2)

    def test_values(self):
        """Spot values and exponents."""
        assert enriques_bound(1) == Fraction(2, 3)
        assert enriques_bound(2) == Fraction(1, 2)
        assert enriques_bound(6) == Fraction(1, 4)
        assert enriques_exponent(2) == 2

    def test_from_phi(self):
        """s = 2/φ(H)."""
        assert enriques_s_from_phi(4) == Fraction(1, 2)
        with pytest.raises(DomainError):
            enriques_s_from_phi(0)

    def test_domain(self):
        """k ≥ 1."""
        with pytest.raises(DomainError):
            enriques_bound(0)
