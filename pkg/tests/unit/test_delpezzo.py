"""Tests for δ(S, -K_S) on del Pezzo surfaces."""

from fractions import Fraction

import pytest

from deltabound.certificates.delpezzo import delpezzo_delta, lower_certificate, upper_certificate
from deltabound.certificates.wclasses import WDivisor, pair_w
from deltabound.core.errors import DomainError
from deltabound.models.values import DeltaInterval


class TestDelPezzoDelta:
    """Test the certified values for degrees 1..9."""

    @pytest.mark.parametrize(
        "degree, expected",
        [
            (9, Fraction(1, 3)),
            (8, Fraction(1, 2)),
            (7, Fraction(1, 2)),
            (6, Fraction(1, 2)),
            (5, Fraction(1, 2)),
            (4, Fraction(1, 2)),
            (3, Fraction(2, 3)),
            (2, Fraction(1)),
        ],
    )
    def test_exact_values(self, degree, expected):
        """Lower and upper certificates meet."""
        result = delpezzo_delta(degree)

        assert result.delta == expected
        assert result.lower.value == result.upper.value == expected

    def test_degree_one_interval(self):
        """Degree 1 is only known as [3/2, 2]."""
        result = delpezzo_delta(1)

        assert result.delta == DeltaInterval(lower=Fraction(3, 2), upper=Fraction(2))
        assert str(result.delta) == "[3/2, 2]"

    @pytest.mark.parametrize("degree", range(1, 10))
    def test_lower_pairing_vanishes(self, degree):
        """(s0·(-K))[2] - E pairs to zero with the covering curve."""
        cert = lower_certificate(degree)
        s0 = delpezzo_delta(degree).lower.value

        assert pair_w(cert.lattice, WDivisor.sym(cert.H * s0, -1), cert.curve) == 0

    @pytest.mark.parametrize("degree", range(1, 10))
    def test_assumptions_listed(self, degree):
        """Every upper report names the geometric input it relies on."""
        report = delpezzo_delta(degree).upper

        assert report.assumptions
        assert all(a.citation for a in report.assumptions)

    def test_upper_target_is_reconstructed(self):
        """Each decomposition sums back to the target."""
        cert = upper_certificate(5)
        for decomposition in cert.decompositions:
            total = WDivisor.zero(cert.lattice.rank)
            for piece in decomposition:
                total = total + piece.piece * piece.coefficient
            assert (cert.target - total).is_zero()

    @pytest.mark.parametrize("degree", [0, 10, -3])
    def test_degree_range(self, degree):
        """Degrees outside 1..9 are rejected."""
        with pytest.raises(DomainError):
            delpezzo_delta(degree)
