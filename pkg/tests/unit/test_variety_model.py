"""Tests for variety models and counting tables."""

import pandas as pd
import pytest
from pydantic import ValidationError

from deltabound.core.errors import DomainError, ParseError
from deltabound.heights.model import (
    BUNDLED_MODELS,
    bundled_model,
    compile_variety,
    load_variety,
    parse_variety,
)
from deltabound.models.variety import CountTable, PointRecord, VarietyModel


class TestVarietyModel:
    """Test model parsing."""

    def test_projective_line(self):
        """The minimal ℙ¹ model."""
        model = parse_variety('{"ambient_dim":1,"equations":[],"exclusions":[],"height_power":1}')

        assert model.nvars == 2
        assert model.label == "P1"

    def test_quadric(self):
        """A smooth quadric in ℙ³."""
        model = parse_variety('{"ambient_dim": 3, "equations": ["x0*x3 - x1*x2"]}')
        compiled = compile_variety(model)

        assert compiled.nvars == 4
        assert compiled.equations[0].degree == 2

    def test_inhomogeneous_rejected(self):
        """x0^2 - x1 is not a form."""
        text = '{\n  "ambient_dim": 1,\n  "equations": ["x0^2 - x1"]\n}'
        with pytest.raises(ParseError) as excinfo:
            parse_variety(text)
        assert "homogeneous" in str(excinfo.value)
        assert excinfo.value.line == 3

    def test_syntax_error_position(self):
        """Polynomial errors point into the JSON text."""
        text = '{"ambient_dim": 1, "equations": ["x0 + x7"]}'
        with pytest.raises(ParseError) as excinfo:
            parse_variety(text)
        assert excinfo.value.column == text.index("x7") + 1

    def test_bad_json(self):
        """JSON errors keep their line and column."""
        with pytest.raises(ParseError) as excinfo:
            parse_variety('{"ambient_dim": 1,\n oops}')
        assert excinfo.value.line == 2

    def test_schema_errors(self):
        """Unknown keys and negative dimensions are rejected."""
        with pytest.raises(ParseError):
            parse_variety('{"ambient_dim": -1}')
        with pytest.raises(ParseError):
            parse_variety('{"ambient_dim": 1, "colour": "red"}')
        with pytest.raises(ParseError):
            parse_variety("[1, 2]")
        with pytest.raises(ValidationError):
            VarietyModel(ambient_dim=1, height_power=0)

    def test_bundled(self):
        """Every bundled model loads and is named after its file."""
        for name in BUNDLED_MODELS:
            assert bundled_model(name).label == name
        with pytest.raises(DomainError):
            bundled_model("cubic")

    def test_load_by_bare_name(self, monkeypatch, tmp_path):
        """A missing file named like a bundled model falls back to it."""
        monkeypatch.chdir(tmp_path)

        assert load_variety("quadric.json").ambient_dim == 3
        with pytest.raises(DomainError):
            load_variety(tmp_path / "nowhere.json")

    def test_load_file(self, tmp_path):
        """Unnamed models take the file stem."""
        path = tmp_path / "line.json"
        path.write_text('{"ambient_dim": 1}', encoding="utf-8")

        assert load_variety(path).label == "line"


class TestPointRecord:
    """Test point records."""

    def test_render(self):
        """Points print projectively."""
        point = PointRecord((1, -2, 0), 2)

        assert str(point) == "(1:-2:0)"
        assert point.shell == 2


class TestCountTable:
    """Test counting tables."""

    def test_csv(self):
        """Header T,count with newline terminators."""
        table = CountTable.from_pairs([(1, 4), (2, 8)])

        assert table.to_csv() == "T,count\n1,4\n2,8\n"

    def test_from_frame(self):
        """Tables come back from data frames."""
        frame = pd.DataFrame({"T": [1, 2], "count": [4, 8]})

        assert CountTable.from_frame(frame).pairs() == [(1, 4), (2, 8)]
        with pytest.raises(DomainError):
            CountTable.from_frame(pd.DataFrame({"T": [1]}))

    def test_monotone(self):
        """T must ascend and counts must not decrease."""
        with pytest.raises(ValidationError):
            CountTable.from_pairs([(2, 1), (1, 2)])
        with pytest.raises(ValidationError):
            CountTable.from_pairs([(1, 5), (2, 4)])
