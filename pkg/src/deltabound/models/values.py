"""Exact value types shared by the JSON-facing models."""

import re
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Optional, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, WithJsonSchema

from deltabound.core.errors import DomainError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Any) -> Fraction:
    """Parse "p/q", "n", an int or a Fraction into an exact Fraction.

    Floats are refused so that no rounded value enters exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise DomainError(f"not a rational 'p/q' string: {value!r}")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise DomainError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise DomainError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical text: "n" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _validate_rational(value: Any) -> Fraction:
    try:
        return parse_rational(value)
    except DomainError as e:
        raise ValueError(str(e)) from e


Rational = Annotated[
    Fraction,
    BeforeValidator(_validate_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$"}),
]


class ExactModel(BaseModel):
    """Base model allowing Fraction fields."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class DeltaInterval(ExactModel):
    """A closed rational interval [lower, upper]; exact when the ends agree."""

    lower: Rational
    upper: Rational

    def model_post_init(self, __context: Any) -> None:
        if self.lower > self.upper:
            raise DomainError(f"empty interval [{self.lower}, {self.upper}]")

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        if self.is_exact:
            return format_rational(self.lower)
        return f"[{format_rational(self.lower)}, {format_rational(self.upper)}]"


DeltaValue = Union[Fraction, DeltaInterval]


def delta_bounds(value: DeltaValue) -> tuple[Fraction, Fraction]:
    """(lower, upper) ends of an exact value or interval."""
    if isinstance(value, DeltaInterval):
        return value.lower, value.upper
    return Fraction(value), Fraction(value)


class ValueKind(str, Enum):
    """How a table cell constrains the true value."""

    EXACT = "exact"
    UPPER = "upper"
    INTERVAL = "interval"


_UPPER_RE = re.compile(r"^\s*(?:<=|≤)\s*(.+)$")
_INTERVAL_RE = re.compile(r"^\s*\[\s*([^,\]]+)\s*,\s*([^\]]+)\]\s*$")


class TableValue(ExactModel):
    """A table cell: an exact rational, an upper bound "≤ q", or an interval."""

    kind: ValueKind
    value: Rational
    lower: Optional[Rational] = None

    @classmethod
    def parse(cls, text: Any) -> "TableValue":
        if isinstance(text, TableValue):
            return text
        if not isinstance(text, str):
            return cls(kind=ValueKind.EXACT, value=parse_rational(text))
        upper = _UPPER_RE.match(text)
        if upper:
            return cls(kind=ValueKind.UPPER, value=parse_rational(upper.group(1)))
        interval = _INTERVAL_RE.match(text)
        if interval:
            low, high = parse_rational(interval.group(1)), parse_rational(interval.group(2))
            if low > high:
                raise DomainError(f"empty interval {text!r}")
            return cls(kind=ValueKind.INTERVAL, value=high, lower=low)
        return cls(kind=ValueKind.EXACT, value=parse_rational(text))

    @property
    def is_exact(self) -> bool:
        return self.kind == ValueKind.EXACT

    @property
    def upper_end(self) -> Fraction:
        """The largest value compatible with the cell."""
        return self.value

    def scaled(self, factor: Fraction) -> "TableValue":
        return TableValue(
            kind=self.kind,
            value=self.value * factor,
            lower=None if self.lower is None else self.lower * factor,
        )

    def __str__(self) -> str:
        if self.kind == ValueKind.UPPER:
            return f"<= {format_rational(self.value)}"
        if self.kind == ValueKind.INTERVAL:
            return f"[{format_rational(self.lower)}, {format_rational(self.value)}]"
        return format_rational(self.value)


def _validate_table_value(value: Any) -> TableValue:
    if isinstance(value, dict):
        return TableValue.model_validate(value)
    try:
        return TableValue.parse(value)
    except DomainError as e:
        raise ValueError(str(e)) from e


TableCell = Annotated[
    TableValue,
    BeforeValidator(_validate_table_value),
    PlainSerializer(str, return_type=str),
    WithJsonSchema({"type": "string", "description": "'q', '<= q' or '[p, q]'"}),
]
