"""Loading and compiling variety model files."""

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import List, Tuple

import structlog
from pydantic import ValidationError

from deltabound.config.settings import DEFAULT_DATA_DIR
from deltabound.core.errors import DomainError, ParseError
from deltabound.heights.polynomial import Polynomial, parse_polynomial
from deltabound.models.variety import VarietyModel

logger = structlog.get_logger(__name__)

BUNDLED_MODELS = ("p1", "p2", "quadric", "conic")


@dataclass(frozen=True)
class CompiledVariety:
    """A model with its equations and exclusions parsed."""

    model: VarietyModel
    equations: Tuple[Polynomial, ...]
    exclusions: Tuple[Polynomial, ...]

    @property
    def nvars(self) -> int:
        return self.model.nvars

    @property
    def height_power(self) -> int:
        return self.model.height_power


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _locate(text: str, source: str) -> Tuple[int, int]:
    """Line and column of the first character of ``source`` inside the JSON text."""
    offset = text.find(json.dumps(source, ensure_ascii=False)[1:-1])
    if offset < 0:
        offset = text.find(source)
    return _position(text, max(offset, 0))


def _compile(model: VarietyModel, text: str = "") -> CompiledVariety:
    compiled: List[List[Polynomial]] = [[], []]
    for slot, (kind, sources) in enumerate(
        (("equation", model.equations), ("exclusion", model.exclusions))
    ):
        for source in sources:
            try:
                poly = parse_polynomial(source, model.nvars)
            except ParseError as e:
                if text:
                    line, column = _locate(text, source)
                    column += e.column - 1
                else:
                    line, column = 1, e.column
                raise ParseError(f"{kind} {source!r}: {e.reason}", line=line, column=column) from e
            if slot == 0 and not poly.is_homogeneous():
                line, column = _locate(text, source) if text else (1, 1)
                raise ParseError(
                    f"equation {source!r} is not homogeneous (degrees {sorted(poly.degrees())})",
                    line=line,
                    column=column,
                )
            compiled[slot].append(poly)
    return CompiledVariety(model, tuple(compiled[0]), tuple(compiled[1]))


@lru_cache(maxsize=64)
def compile_variety(model: VarietyModel) -> CompiledVariety:
    """Parse the polynomials of ``model``.

    Raises:
        ParseError: on a syntax error, an unknown variable or a non-homogeneous equation.
    """
    return _compile(model)


def parse_variety(text: str) -> VarietyModel:
    """Parse and validate a JSON variety model; errors carry line and column."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(raw, dict):
        raise ParseError("variety model must be a JSON object")
    try:
        model = VarietyModel.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "model"
        field = str(first["loc"][0]) if first["loc"] else ""
        offset = text.find(f'"{field}"') if field else -1
        line, column = _position(text, offset) if offset >= 0 else (1, 1)
        raise ParseError(f"{where}: {first['msg']}", line=line, column=column) from e
    _compile(model, text)
    logger.debug("variety.parsed", name=model.label, ambient_dim=model.ambient_dim)
    return model


def load_variety(path: Path) -> VarietyModel:
    """Read a model file, or a bundled model by name ("p1", "quadric", ...)."""
    path = Path(path)
    if not path.exists() and path.stem in BUNDLED_MODELS and path.parent == Path("."):
        path = bundled_model_path(path.stem)
    if not path.exists():
        raise DomainError(f"variety model file not found: {path}")
    model = parse_variety(path.read_text(encoding="utf-8"))
    if model.name is None:
        model = model.model_copy(update={"name": path.stem})
    return model


def bundled_model_path(name: str, data_dir: Path = DEFAULT_DATA_DIR) -> Path:
    if name not in BUNDLED_MODELS:
        raise DomainError(f"unknown bundled model {name!r}; choose from {', '.join(BUNDLED_MODELS)}")
    return data_dir / "varieties" / f"{name}.json"


def bundled_model(name: str) -> VarietyModel:
    return load_variety(bundled_model_path(name))
