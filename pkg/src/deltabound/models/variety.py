"""Variety models, rational points and counting tables."""

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from deltabound.core.errors import DomainError


class VarietyModel(BaseModel):
    """A closed subvariety of ℙⁿ with an open set U and a polarization O(m)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    ambient_dim: int = Field(ge=0, description="n, points live in ℙⁿ")
    equations: Tuple[str, ...] = Field(
        default=(), description="Homogeneous integer polynomials in x0..xn cutting out X"
    )
    exclusions: Tuple[str, ...] = Field(
        default=(), description="Polynomials whose common zero locus is removed from X"
    )
    height_power: int = Field(default=1, ge=1, description="m, the height is max|x_i|^m")
    name: Optional[str] = Field(default=None, description="Display name")

    @property
    def nvars(self) -> int:
        return self.ambient_dim + 1

    @property
    def label(self) -> str:
        return self.name or f"P{self.ambient_dim}"


@dataclass(frozen=True)
class PointRecord:
    """A primitive, sign-normalized point with its height max|x_i|^m."""

    coords: Tuple[int, ...]
    height: int

    def __post_init__(self) -> None:
        if __debug__:
            nonzero = [x for x in self.coords if x]
            assert nonzero and nonzero[0] > 0, f"not sign-normalized: {self.coords}"
            g = 0
            for x in self.coords:
                g = gcd(g, x)
            assert g == 1, f"not primitive: {self.coords}"

    @property
    def shell(self) -> int:
        return max(abs(x) for x in self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(x) for x in self.coords) + ")"


class CountRow(BaseModel):
    """N(U, L, T) at one height bound."""

    T: int = Field(ge=1)
    count: int = Field(ge=0)


class CountTable(BaseModel):
    """Rows (T, N(U, L, T)), ascending in T and nondecreasing in count."""

    rows: List[CountRow] = Field(default_factory=list)

    @field_validator("rows")
    @classmethod
    def check_monotone(cls, rows: List[CountRow]) -> List[CountRow]:
        for prev, row in zip(rows, rows[1:]):
            if row.T <= prev.T:
                raise ValueError(f"T values must ascend: {prev.T} then {row.T}")
            if row.count < prev.count:
                raise ValueError(f"counts must not decrease: {prev.count} then {row.count}")
        return rows

    @classmethod
    def from_pairs(cls, pairs) -> "CountTable":
        return cls(rows=[CountRow(T=t, count=c) for t, c in pairs])

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "CountTable":
        missing = {"T", "count"} - set(frame.columns)
        if missing:
            raise DomainError(f"series is missing column(s) {sorted(missing)}")
        try:
            return cls.from_pairs(
                (int(t), int(c)) for t, c in zip(frame["T"], frame["count"])
            )
        except ValidationError as e:
            raise DomainError(f"bad series: {e.errors()[0]['msg']}") from e

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"T": [r.T for r in self.rows], "count": [r.count for r in self.rows]}
        )

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def pairs(self) -> List[Tuple[int, int]]:
        return [(r.T, r.count) for r in self.rows]
