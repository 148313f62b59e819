"""Tests for the embedded Fano tables."""

import json
from fractions import Fraction

import pytest

from deltabound.core.errors import DomainError, ParseError
from deltabound.fano.database import FanoDatabase, lookup, parse_tables
from deltabound.models.fano import FanoFlag
from deltabound.models.values import ValueKind


class TestLookup:
    """Test single-entry lookups."""

    def test_exact_entry(self, fano_db):
        """2-31: 6δ = 3, 2α = 5/3, degree 46."""
        entry = fano_db.lookup(2, 31)

        assert entry.six_delta.value == 3
        assert entry.six_delta.is_exact
        assert entry.two_alpha.value == Fraction(5, 3)
        assert entry.anticanonical_degree == 46
        assert entry.delta.value == Fraction(1, 2)
        assert entry.alpha.value == Fraction(5, 6)

    def test_upper_bound_cells(self, fano_db):
        """2-24 is only bounded from above."""
        entry = fano_db.lookup(2, 24)

        assert str(entry.six_delta) == "<= 6"
        assert str(entry.two_alpha) == "<= 5"
        assert entry.six_delta.kind == ValueKind.UPPER

    def test_rank_four(self):
        """The module-level lookup uses the bundled tables."""
        entry = lookup(4, 6)

        assert str(entry.six_delta) == "3"
        assert str(entry.two_alpha) == "2"
        assert entry.key == "4-6"

    def test_flags(self, fano_db):
        """Toric entries carry both flags."""
        entry = fano_db.lookup(2, 34)

        assert entry.has_flag(FanoFlag.TORIC)
        assert entry.has_flag(FanoFlag.MANIN_KNOWN)
        assert not fano_db.lookup(2, 31).flags

    def test_unknown(self, fano_db):
        """Missing keys are domain errors."""
        with pytest.raises(DomainError):
            fano_db.lookup(2, 1)
        with pytest.raises(DomainError):
            fano_db.lookup(11, 1)


class TestGeneratedRanks:
    """Test the ℙ¹ × S_d rows for ranks 6 to 10."""

    @pytest.mark.parametrize(
        "rank, text",
        [(6, "3"), (7, "3"), (8, "4"), (9, "6"), (10, "[9, 12]")],
    )
    def test_values(self, fano_db, rank, text):
        """6δ(ℙ¹ × S_{11-ρ}) = 6δ(S_{11-ρ})."""
        entry = fano_db.lookup(rank, 1)

        assert str(entry.six_delta) == text
        assert f"S_{{{11 - rank}}}" in entry.description

    def test_interval_kind(self, fano_db):
        """Degree 1 is only known within an interval."""
        cell = fano_db.lookup(10, 1).six_delta

        assert cell.kind == ValueKind.INTERVAL
        assert cell.lower == 9


class TestQueries:
    """Test listing and counting."""

    def test_count_exact(self, fano_db):
        """Entries with 6δ exactly 3 across stored and generated ranks."""
        assert fano_db.count_exact(Fraction(3)) == 40

    def test_entries_sorted(self, fano_db):
        """Entries come back sorted by (rank, number)."""
        keys = [(e.picard_rank, e.mm_number) for e in fano_db.entries()]

        assert keys == sorted(keys)
        assert len(keys) == len(fano_db) == 53

    def test_rank_filter(self, fano_db):
        """Rank filters keep only that rank."""
        assert {e.picard_rank for e in fano_db.entries(4)} == {4}


class TestExport:
    """Test the JSON and CSV exports."""

    def test_json_is_canonical(self, fano_db):
        """Parsing the export and dumping again gives the same text."""
        text = fano_db.export_json()
        entries = parse_tables(text)
        again = json.dumps(
            [e.model_dump(mode="json") for e in entries], ensure_ascii=False, indent=2, sort_keys=True
        ) + "\n"

        assert again == text
        assert len(entries) == len(fano_db)

    def test_json_cells_are_strings(self, fano_db):
        """Table cells serialize as their table text."""
        payload = json.loads(fano_db.export_json(rank=2))

        cell = next(e for e in payload if e["mm_number"] == 24)
        assert cell["six_delta"] == "<= 6"

    def test_csv(self, fano_db):
        """CSV has a header and one row per entry."""
        lines = fano_db.export_csv(rank=5).splitlines()

        assert lines[0].startswith("picard_rank,mm_number,")
        assert len(lines) == 1 + len(fano_db.entries(5))


class TestLoading:
    """Test table parsing and data directories."""

    def test_bad_cell(self):
        """Malformed cells become parse errors."""
        bad = '[{"picard_rank": 2, "mm_number": 1, "description": "x", "six_delta": "[4, 3]"}]'
        with pytest.raises(ParseError):
            parse_tables(bad)

    def test_exact_below_three(self):
        """Exact 6δ below 3 is rejected."""
        bad = '[{"picard_rank": 2, "mm_number": 1, "description": "x", "six_delta": "2"}]'
        with pytest.raises(ParseError):
            parse_tables(bad)

    def test_custom_data_dir(self, tmp_path):
        """A data directory with its own tables."""
        (tmp_path / "fano_tables.json").write_text(
            '[{"picard_rank": 3, "mm_number": 1, "description": "x", "six_delta": "<= 6"}]',
            encoding="utf-8",
        )
        db = FanoDatabase(tmp_path)

        assert len(db) == 6
        assert str(db.lookup(3, 1).six_delta) == "<= 6"

    def test_duplicate_with_generated(self, tmp_path):
        """Stored rows may not collide with generated ones."""
        (tmp_path / "fano_tables.json").write_text(
            '[{"picard_rank": 6, "mm_number": 1, "description": "x", "six_delta": "3"}]',
            encoding="utf-8",
        )
        with pytest.raises(ParseError):
            FanoDatabase(tmp_path)
