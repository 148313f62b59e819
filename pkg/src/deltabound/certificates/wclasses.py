"""Numerical classes on the diagonal blow-up W′ of X × X."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from deltabound.core.errors import DomainError
from deltabound.lattice.core import (
    CurveClass,
    DivisorClass,
    IntersectionLattice,
    format_class,
    intersect,
)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class WDivisor:
    """π₁*d1 + π₂*d2 + e·E, with e the signed exceptional coefficient."""

    d1: DivisorClass
    d2: DivisorClass
    e: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", Fraction(self.e))
        if self.d1.rank != self.d2.rank:
            raise DomainError("WDivisor factors live in different lattices")

    @classmethod
    def sym(cls, d: DivisorClass, e: Number = 0) -> "WDivisor":
        """d[2] + e·E."""
        return cls(d, d, Fraction(e))

    @classmethod
    def zero(cls, rank: int) -> "WDivisor":
        z = DivisorClass.zero(rank)
        return cls(z, z, Fraction(0))

    def __add__(self, other: "WDivisor") -> "WDivisor":
        return WDivisor(self.d1 + other.d1, self.d2 + other.d2, self.e + other.e)

    def __sub__(self, other: "WDivisor") -> "WDivisor":
        return WDivisor(self.d1 - other.d1, self.d2 - other.d2, self.e - other.e)

    def __mul__(self, scalar: Number) -> "WDivisor":
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        return WDivisor(self.d1 * scalar, self.d2 * scalar, self.e * scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.d1.is_zero() and self.d2.is_zero() and self.e == 0

    @property
    def is_symmetric(self) -> bool:
        return self.d1 == self.d2

    def render(self, lat: IntersectionLattice) -> str:
        if self.is_symmetric:
            head = f"({format_class(lat, self.d1)})[2]"
        else:
            head = f"π1*({format_class(lat, self.d1)}) + π2*({format_class(lat, self.d2)})"
        if self.e == 0:
            return head
        sign = "-" if self.e < 0 else "+"
        mag = abs(self.e)
        return f"{head} {sign} {'' if mag == 1 else str(mag)}E"


@dataclass(frozen=True)
class WCurve:
    """A curve on W′: factor images c1, c2 and m = E·C ≥ 0."""

    c1: CurveClass
    c2: CurveClass
    m: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", Fraction(self.m))
        if self.c1.rank != self.c2.rank:
            raise DomainError("WCurve factors live in different lattices")
        if self.m < 0:
            raise DomainError(f"diagonal multiplicity must be nonnegative, got {self.m}")


def pair_w(lat: IntersectionLattice, D: WDivisor, C: WCurve) -> Fraction:
    """d1·c1 + d2·c2 + e·m."""
    return intersect(lat, D.d1, C.c1) + intersect(lat, D.d2, C.c2) + D.e * C.m
