"""s-invariants and counting exponents of rank-one K3 and unnodal Enriques surfaces."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

import structlog

from deltabound.core.errors import DomainError
from deltabound.core.intmath import is_square
from deltabound.models.values import format_rational
from deltabound.pell.solvers import PellSolution, pell_fundamental, pell_general_min_even

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SValue:
    """coefficient / √radicand, kept exact; radicand is 1 whenever the value is rational."""

    coefficient: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        coefficient = Fraction(self.coefficient)
        radicand = self.radicand
        if radicand < 1:
            raise DomainError("radicand must be positive")
        if is_square(radicand):
            coefficient /= isqrt(radicand)
            radicand = 1
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "radicand", radicand)

    @classmethod
    def inv_sqrt(cls, d: int) -> "SValue":
        return cls(Fraction(1), d)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def exact(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.coefficient

    def squared(self) -> Fraction:
        return self.coefficient * self.coefficient / self.radicand

    def scale(self, factor: Union[int, Fraction]) -> "SValue":
        return SValue(self.coefficient * factor, self.radicand)

    def symbolic(self) -> Optional[Tuple[str, int]]:
        """("inv_sqrt", d) when the value is 1/√d with d not a square."""
        if self.radicand != 1 and self.coefficient == 1:
            return ("inv_sqrt", self.radicand)
        return None

    def __str__(self) -> str:
        if self.is_rational:
            return format_rational(self.coefficient)
        return f"{format_rational(self.coefficient)}/sqrt({self.radicand})"


class SBranch(str, Enum):
    """Which case of the Pell case split produced the s-invariant."""

    EVEN_Y_SOLUTION = "EVEN_Y_SOLUTION"
    SQUARE_D = "SQUARE_D"
    PELL_UNIT = "PELL_UNIT"


@dataclass(frozen=True)
class SInvariantResult:
    d: int
    value: SValue
    branch: SBranch
    witness: Optional[PellSolution]
    bound_ok: bool
    sub_bound_ok: Optional[bool] = None

    @property
    def delta_upper(self) -> SValue:
        """δ(S, H) ≤ s(S, H)."""
        return self.value


def _within(value_squared: Fraction, numerator: int, d: int) -> bool:
    """value² ≤ numerator/d², cross-multiplied in integers."""
    return value_squared.numerator * d * d <= numerator * value_squared.denominator


def k3_bound_holds(value: SValue, d: int) -> bool:
    """s² ≤ 4/d + 5/d²."""
    return _within(value.squared(), 4 * d + 5, d)


def k3_s_invariant(d: int, fallback_bound: int = 10**6) -> SInvariantResult:
    """s(S, H) for a K3 surface with Pic = ℤH, H² = 2d."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise DomainError(f"k3_s_invariant needs d >= 1, got {d!r}")

    solution = pell_general_min_even(d, fallback_bound=fallback_bound)
    sub_bound: Optional[bool] = None
    if solution is not None:
        value = SValue(Fraction(solution.x, d * solution.y))
        branch, witness = SBranch.EVEN_Y_SOLUTION, solution
    elif is_square(d):
        value = SValue.inv_sqrt(d)
        branch, witness = SBranch.SQUARE_D, None
    else:
        witness = pell_fundamental(d)
        value = SValue(Fraction(witness.x, d * witness.y))
        branch = SBranch.PELL_UNIT
        sub_bound = _within(value.squared(), d + 1, d)

    result = SInvariantResult(
        d=d,
        value=value,
        branch=branch,
        witness=witness,
        bound_ok=k3_bound_holds(value, d),
        sub_bound_ok=sub_bound,
    )
    logger.debug("k3.s_invariant", d=d, branch=branch.value, s=str(value))
    return result


def k3_exponent(d: int, fallback_bound: int = 10**6) -> Tuple[SValue, bool]:
    """(4·s(S, H), whether 4s ≤ 4√(4/d + 5/d²))."""
    result = k3_s_invariant(d, fallback_bound=fallback_bound)
    exponent = result.value.scale(4)
    return exponent, _within(exponent.squared(), 16 * (4 * d + 5), d)


def enriques_bound(k: int) -> Fraction:
    """s(Y, H) ≤ 2/(k+2) for a k-very ample H on an unnodal Enriques surface."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"enriques_bound needs k >= 1, got {k!r}")
    return Fraction(2, k + 2)


def enriques_exponent(k: int) -> Fraction:
    return 4 * enriques_bound(k)


def enriques_s_from_phi(phi: int) -> Fraction:
    """s(Y, H) = 2/φ(H) from the Cossec-Dolgachev value φ(H)."""
    if isinstance(phi, bool) or not isinstance(phi, int) or phi < 1:
        raise DomainError(f"phi(H) must be a positive integer, got {phi!r}")
    return Fraction(2, phi)
