"""End-to-end checks of the invariants against point counts."""

import time
from fractions import Fraction

import pytest

from deltabound.cli.main import run
from deltabound.config.settings import EnumerationConfig
from deltabound.fano.database import default_database
from deltabound.heights.counting import counting_series, geometric_steps
from deltabound.heights.fit import fit_exponent
from deltabound.heights.model import bundled_model
from deltabound.heights.repulsion import repulsion_scan
from deltabound.pell.k3 import k3_s_invariant


class TestGrowthExponents:
    """Fitted exponents match 2nδ = dim + 1 on projective space."""

    @pytest.mark.slow
    @pytest.mark.integration
    def test_p1(self):
        """N(ℙ¹, T) grows like T²."""
        table = counting_series(bundled_model("p1"), geometric_steps(1000, 12))

        assert 1.95 <= fit_exponent(table).slope <= 2.05

    @pytest.mark.slow
    @pytest.mark.integration
    def test_p2(self):
        """N(ℙ², T) grows like T³."""
        table = counting_series(
            bundled_model("p2"), geometric_steps(100, 10), EnumerationConfig(threads=2)
        )

        assert 2.9 <= fit_exponent(table).slope <= 3.1


class TestRepulsion:
    """Repulsion minima stay bounded away from zero."""

    @pytest.mark.slow
    @pytest.mark.integration
    def test_p2(self):
        """δ(ℙ², O(1)) = 1 with ε = 0 keeps the minimum at least 1/9."""
        result = repulsion_scan(bundled_model("p2"), Fraction(1), Fraction(0), 20)

        assert result.min_product >= Fraction(1, 9)


class TestK3Range:
    """The s-invariant bound over a long range of d."""

    @pytest.mark.slow
    @pytest.mark.integration
    def test_bound_holds(self):
        """s² ≤ 4/d + 5/d² for every d up to 10⁴, within thirty seconds."""
        start = time.perf_counter()
        failures = [d for d in range(1, 10_001) if not k3_s_invariant(d).bound_ok]
        elapsed = time.perf_counter() - start

        assert failures == []
        assert elapsed < 30.0


class TestTables:
    """Every certified entry in the bundled tables verifies."""

    @pytest.mark.integration
    def test_verify_all(self):
        """All entries with certificates verify through the CLI."""
        db = default_database()
        keys = [(e.picard_rank, e.mm_number) for e in db.entries() if e.certificates]

        assert len(keys) == 5
        for rank, number in keys:
            result = run(["fano", "verify", "--rank", str(rank), "--no", str(number)])
            assert result.exit_code == 0, result.payload
            assert "certified" in result.payload


class TestDeterminism:
    """Outputs are byte-identical between runs and worker counts."""

    @pytest.mark.slow
    @pytest.mark.integration
    @pytest.mark.parametrize(
        "name, last_row",
        [("p1", "50,3096"), ("p2", "50,427393"), ("quadric", "50,43008"), ("conic", "50,60")],
    )
    def test_count(self, name, last_row):
        """count at T = 50 is identical for one and eight workers."""
        one = run(["--threads", "1", "count", "--model", name, "--tmax", "50"])
        eight = run(["--threads", "8", "count", "--model", name, "--tmax", "50"])

        assert one.exit_code == eight.exit_code == 0
        assert one.payload == eight.payload
        assert one.payload.startswith("T,count\n1,")
        assert one.payload.splitlines()[-1] == last_row
