"""Squared chordal distance at the archimedean place."""

from fractions import Fraction
from typing import Sequence, Tuple, Union

from deltabound.core.errors import DomainError
from deltabound.models.variety import PointRecord

PointLike = Union[PointRecord, Sequence[int]]


def _coords(p: PointLike) -> Tuple[int, ...]:
    return tuple(p.coords) if isinstance(p, PointRecord) else tuple(int(x) for x in p)


def wedge_terms(x: Sequence[int], y: Sequence[int]) -> Tuple[int, int, int]:
    """(|x|², |y|², |x∧y|²) with |x∧y|² = |x|²|y|² - (x·y)²."""
    nx = sum(a * a for a in x)
    ny = sum(b * b for b in y)
    dot = sum(a * b for a, b in zip(x, y))
    return nx, ny, nx * ny - dot * dot


def proj_distance(P: PointLike, Q: PointLike) -> Fraction:
    """dist²(P, Q) = |x∧y|² / (|x|²|y|²), exact and in [0, 1]."""
    x, y = _coords(P), _coords(Q)
    if len(x) != len(y):
        raise DomainError(f"points live in different ambient spaces ({len(x)} vs {len(y)} coordinates)")
    nx, ny, wedge = wedge_terms(x, y)
    if nx == 0 or ny == 0:
        raise DomainError("the zero vector is not a projective point")
    return Fraction(wedge, nx * ny)


def triangle_holds(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """√a ≤ √b + √c for squared distances, decided without square roots.

    a ≤ b + c + 2√(bc) holds trivially when a ≤ b + c, otherwise square the
    remaining nonnegative gap.
    """
    gap = a - b - c
    if gap <= 0:
        return True
    return gap * gap <= 4 * b * c
