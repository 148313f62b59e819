"""Cone membership and the Fujita a-invariant by exact linear programming."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import List, Optional, Union

import structlog

from deltabound.core.errors import DomainError
from deltabound.lattice.core import (
    DivisorClass,
    IntersectionLattice,
    as_curve,
    effective_generators,
    intersect,
    is_nef,
)
from deltabound.lattice.simplex import LPStatus, RationalSimplex
from deltabound.models.values import TableValue, ValueKind

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ConeMembershipWitness:
    """Nonnegative coefficients over the generator list reproducing a class."""

    generators: tuple
    coefficients: tuple
    residual: DivisorClass

    def recombine(self) -> DivisorClass:
        total = DivisorClass.zero(self.residual.rank)
        for c, g in zip(self.coefficients, self.generators):
            total = total + g * c
        return total


@total_ordering
class _PositiveInfinity:
    """The value of a(X, L) for L not big."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        return False

    def __hash__(self) -> int:
        return hash("+inf")

    def __repr__(self) -> str:
        return "A_INFINITY"

    def __str__(self) -> str:
        return "+inf"


A_INFINITY = _PositiveInfinity()

AValue = Union[Fraction, _PositiveInfinity]


def is_pseudo_effective(
    lat: IntersectionLattice, D: DivisorClass
) -> Optional[ConeMembershipWitness]:
    """Witness that D lies in the cone spanned by the effective generators, or None."""
    lat.check(D)
    gens = effective_generators(lat)
    if not gens:
        raise DomainError("lattice has no effective-cone generators")
    a = [[g.coords[row] for g in gens] for row in range(lat.rank)]
    point = RationalSimplex(a, D.coords, [0] * len(gens)).feasible_point()
    if point is None:
        return None
    recombined = DivisorClass.zero(lat.rank)
    for c, g in zip(point, gens):
        recombined = recombined + g * c
    residual = D - recombined
    if not residual.is_zero():
        raise ArithmeticError(f"cone witness does not reproduce {D.coords}")
    return ConeMembershipWitness(
        generators=tuple(gens), coefficients=tuple(point), residual=residual
    )


def fujita_a(lat: IntersectionLattice, L: DivisorClass) -> AValue:
    """a(X, L) = min{t : K + tL pseudo-effective}; A_INFINITY when L is not big."""
    lat.check(L)
    if lat.dimension != 2:
        raise DomainError("fujita_a is implemented for surface lattices only")
    if not is_nef(lat, L):
        raise DomainError("L must be nef: the a-invariant is only modeled for big and nef classes")
    if intersect(lat, L, as_curve(L)) <= 0:
        return A_INFINITY

    gens = effective_generators(lat)
    k = len(gens)
    # variables: λ_1..λ_k, t⁺, t⁻ ; Σ λ g - (t⁺ - t⁻) L = K
    a: List[List[Fraction]] = []
    for row in range(lat.rank):
        a.append([g.coords[row] for g in gens] + [-L.coords[row], L.coords[row]])
    c = [Fraction(0)] * k + [Fraction(1), Fraction(-1)]
    result = RationalSimplex(a, lat.canonical_class.coords, c).solve()
    if result.status != LPStatus.OPTIMAL:
        # big classes always admit K + tL effective for large t
        raise ArithmeticError(f"a-invariant LP ended {result.status.value} for a big class")
    logger.debug("cones.fujita_a", lattice=lat.name, L=[str(x) for x in L.coords], a=str(result.value))
    return result.value


def _positive(value: Fraction, name: str) -> Fraction:
    value = Fraction(value)
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def delta_upper_via_a(a_value: Fraction, delta_minus_K: Fraction) -> TableValue:
    """The bound δ(X, H) ≤ a(X, H)·δ(X, -K_X), valid for smooth weak Fano X."""
    bound = _positive(a_value, "a_value") * _positive(delta_minus_K, "delta_minus_K")
    return TableValue(kind=ValueKind.UPPER, value=bound)


def check_conjecture_a_vs_delta(a_value: Fraction, delta_value: Fraction, n: int) -> bool:
    """a(X, L) ≤ 2n·δ(X, L); a reporting check, never an assertion."""
    return Fraction(a_value) <= 2 * n * Fraction(delta_value)
