"""Fano threefold table entries and counting-bound statements."""

from enum import Enum
from fractions import Fraction
from typing import List, Optional

from pydantic import Field, field_validator, model_validator

from deltabound.models.values import ExactModel, Rational, TableCell, TableValue


class FanoFlag(str, Enum):
    TORIC = "TORIC"
    MANIN_KNOWN = "MANIN_KNOWN"


class BoundSource(str, Enum):
    """Which counting theorem a bound statement comes from."""

    GENERAL_2N_DELTA = "GENERAL_2N_DELTA"
    CONIC_ALPHA = "CONIC_ALPHA"
    TWISTED = "TWISTED"


class FanoEntry(ExactModel):
    """One row of the Mori-Mukai tables of Fano conic bundles with a rational section."""

    picard_rank: int = Field(ge=2, description="Picard rank ρ(X)")
    mm_number: int = Field(ge=1, description="Mori-Mukai number within the rank")
    description: str = Field(description="Table text, verbatim")
    anticanonical_degree: Optional[int] = Field(default=None, description="(-K_X)^3 where listed")
    six_delta: TableCell = Field(description="6δ(X, -K_X): exact, '<= q' or '[p, q]'")
    two_alpha: Optional[TableCell] = Field(default=None, description="2α: exact or '<= q'")
    flags: List[FanoFlag] = Field(default_factory=list)
    certificates: List[str] = Field(default_factory=list, description="Certificate ids")

    @field_validator("flags")
    @classmethod
    def sort_flags(cls, flags: List[FanoFlag]) -> List[FanoFlag]:
        return sorted(set(flags), key=lambda f: f.value)

    @model_validator(mode="after")
    def check_six_delta(self) -> "FanoEntry":
        if self.six_delta.is_exact and self.six_delta.value < 3:
            raise ValueError(f"exact 6δ must be at least 3, got {self.six_delta}")
        return self

    @property
    def key(self) -> str:
        return f"{self.picard_rank}-{self.mm_number}"

    @property
    def delta(self) -> TableValue:
        """δ(X, -K_X) = six_delta / 6."""
        return self.six_delta.scaled(Fraction(1, 6))

    @property
    def alpha(self) -> Optional[TableValue]:
        return None if self.two_alpha is None else self.two_alpha.scaled(Fraction(1, 2))

    def has_flag(self, flag: FanoFlag) -> bool:
        return flag in self.flags

    def to_row(self) -> dict:
        return {
            "picard_rank": self.picard_rank,
            "mm_number": self.mm_number,
            "anticanonical_degree": self.anticanonical_degree,
            "six_delta": str(self.six_delta),
            "two_alpha": "" if self.two_alpha is None else str(self.two_alpha),
            "flags": " ".join(f.value for f in self.flags),
            "certificates": " ".join(self.certificates),
            "description": self.description,
        }


class BoundStatement(ExactModel):
    """N(U, L, T) = O(T^{exponent (+ ε)}) on a dense open U."""

    exponent: Rational
    epsilon_required: bool = True
    open_subset_caveat: bool = True
    source: BoundSource
    best: bool = False
    note: Optional[str] = None

    @field_validator("exponent")
    @classmethod
    def check_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("exponent must be positive")
        return v

    def __str__(self) -> str:
        eps = " + eps" if self.epsilon_required else ""
        return f"O(T^({self.exponent}{eps})) [{self.source.value}]"
