"""Tests for the computation pipeline behind the CLI."""

from fractions import Fraction

import pandas as pd
import pytest

import deltabound.core.pipeline as pipeline_module
from deltabound.config.settings import Settings
from deltabound.core.errors import DomainError, ResourceLimitError
from deltabound.core.pipeline import DeltaBoundPipeline, parse_coordinates


class TestParseCoordinates:
    """Test divisor coordinate parsing."""

    def test_values(self):
        """Integers and fractions, whitespace tolerated."""
        assert parse_coordinates("1, 0,-1/2") == [Fraction(1), Fraction(0), Fraction(-1, 2)]

    @pytest.mark.parametrize("text", ["", "1,,2", "1,x"])
    def test_bad(self, text):
        """Empty or non-rational parts are rejected."""
        with pytest.raises(DomainError):
            parse_coordinates(text)


class TestInvariants:
    """Test the invariant payloads."""

    def test_k3(self, pipeline):
        """d = 2 uses the Pell unit (3, 2)."""
        payload = pipeline.k3_bound(2)

        assert payload.branch == "PELL_UNIT"
        assert payload.s == "3/4"
        assert payload.exponent == "3"
        assert payload.witness == [3, 2]
        assert payload.bound_ok

    def test_k3_square(self, pipeline):
        """Square d has no witness."""
        payload = pipeline.k3_bound(4)

        assert payload.branch == "SQUARE_D"
        assert payload.witness is None
        assert payload.exponent == "2"

    def test_enriques(self, pipeline):
        """k = 2 gives s ≤ 1/2 and exponent 2."""
        payload = pipeline.enriques_bound(2)

        assert payload.s_bound == Fraction(1, 2)
        assert payload.exponent == 2
        assert payload.model_dump(mode="json")["s_bound"] == "1/2"

    def test_delpezzo(self, pipeline):
        """Exact and interval degrees."""
        cubic = pipeline.delpezzo(3)
        assert (cubic.delta, cubic.exact, cubic.reports) == ("2/3", True, [])

        degree_one = pipeline.delpezzo(1, certify=True)
        assert degree_one.delta == "[3/2, 2]"
        assert (degree_one.lower, degree_one.upper) == ("3/2", "2")
        assert not degree_one.exact
        assert len(degree_one.reports) == 2

    def test_a_invariant(self, pipeline):
        """a(ℙ², H) = 3."""
        payload = pipeline.a_invariant("delpezzo:9", "1")

        assert payload.a == "3"
        assert payload.lattice == "dP9"

    def test_a_invariant_anticanonical(self, pipeline):
        """a(S, -K_S) = 1 on a cubic surface."""
        payload = pipeline.a_invariant("delpezzo:3", "3,-1,-1,-1,-1,-1,-1")

        assert payload.a == "1"


class TestFano:
    """Test the Fano payloads."""

    def test_lookup(self, pipeline):
        """Entry plus both statements."""
        payload = pipeline.fano_lookup(2, 31)

        assert payload.entry.key == "2-31"
        assert len(payload.bounds) == 2

    def test_verify(self, pipeline):
        """Certified entries verify."""
        assert pipeline.fano_verify(3, 23).ok

    def test_database_loaded_once(self, pipeline, mocker):
        """The tables are read on first use and reused."""
        spy = mocker.spy(pipeline_module, "FanoDatabase")

        pipeline.fano_lookup(2, 31)
        pipeline.fano_verify(4, 6)

        assert spy.call_count == 1


class TestHeights:
    """Test counting, fitting and repulsion through the pipeline."""

    def test_count(self, pipeline):
        """Bundled names resolve; every T up to tmax is listed."""
        payload = pipeline.count("p1", 3)

        assert [(r.T, r.count) for r in payload.rows] == [(1, 4), (2, 8), (3, 16)]
        assert payload.model == "p1"

    def test_count_steps(self, pipeline):
        """A geometric grid ends at tmax."""
        payload = pipeline.count("p1", 100, steps=4)

        assert payload.rows[-1].T == 100

    def test_count_missing_model(self, pipeline, tmp_path):
        """Unknown model files are domain errors."""
        with pytest.raises(DomainError):
            pipeline.count(tmp_path / "nope.json", 3)

    def test_resource_limit(self):
        """The candidate cap from settings applies."""
        pipeline = DeltaBoundPipeline(Settings(max_candidates=10))
        with pytest.raises(ResourceLimitError):
            pipeline.count("p2", 10)

    def test_fit_frame(self, pipeline):
        """A data frame of counts fits directly."""
        frame = pd.DataFrame({"T": [1, 10, 100, 1000], "count": [1, 10, 100, 1000]})

        assert pipeline.fit(frame).slope == pytest.approx(1.0)

    def test_fit_bad_series(self, pipeline):
        """Decreasing counts are rejected."""
        frame = pd.DataFrame({"T": [1, 2, 3], "count": [5, 4, 6]})
        with pytest.raises(DomainError):
            pipeline.fit(frame)

    def test_repulsion(self, pipeline):
        """One row per T."""
        payload = pipeline.repulsion("p1", "1", "0", 20, steps=3)

        assert payload.power == 1
        assert payload.rows[-1].T == 20
        for row in payload.rows:
            assert Fraction(row.min_product_num, row.min_product_den) >= Fraction(1, 4)
