"""Parametric α solver for conic-bundle counting exponents.

For a conic bundle f: X → S with 2α - 2β = 1 the divisor
α(-K_X - f*(-K_S)) + β·f*(-K_S) must be rewritten as a nonnegative
combination of pieces; each rewrite coefficient is affine in α.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import structlog

from deltabound.core.errors import CertificateError, DomainError
from deltabound.lattice.core import DivisorClass, IntersectionLattice, format_class
from deltabound.models.values import format_rational

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Affine:
    """p·α + q."""

    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    def __call__(self, alpha: Fraction) -> Fraction:
        return self.p * alpha + self.q

    def __str__(self) -> str:
        return f"{format_rational(self.p)}*alpha + {format_rational(self.q)}"


@dataclass(frozen=True)
class RewritePiece:
    piece: DivisorClass
    coeff: Affine


@dataclass(frozen=True)
class AffineConstraint:
    """coeff(α) ≥ bound."""

    coeff: Affine
    bound: Fraction
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "bound", Fraction(self.bound))

    def holds(self, alpha: Fraction) -> bool:
        return self.coeff(alpha) >= self.bound


@dataclass(frozen=True)
class AlphaTemplate:
    lattice: IntersectionLattice
    base_pullback: DivisorClass
    anticanonical: DivisorClass
    rewrite_pieces: Tuple[RewritePiece, ...]
    constraints: Tuple[AffineConstraint, ...]
    id: str = ""


@dataclass(frozen=True)
class AlphaSolution:
    alpha_min: Fraction
    two_alpha: Fraction


def _lhs(t: AlphaTemplate, alpha: Fraction) -> DivisorClass:
    beta = (2 * alpha - 1) / 2
    return (t.anticanonical - t.base_pullback) * alpha + t.base_pullback * beta


def _rhs(t: AlphaTemplate, alpha: Fraction) -> DivisorClass:
    total = DivisorClass.zero(t.lattice.rank)
    for rp in t.rewrite_pieces:
        total = total + rp.piece * rp.coeff(alpha)
    return total


def check_template_identity(t: AlphaTemplate) -> None:
    """Both sides are affine in α, so agreement at α = 0 and α = 1 is an identity."""
    for alpha in (Fraction(0), Fraction(1)):
        residual = _lhs(t, alpha) - _rhs(t, alpha)
        if not residual.is_zero():
            raise CertificateError(
                f"alpha template {t.id or ''} identity fails at alpha = {alpha}",
                residual=format_class(t.lattice, residual),
            )


def alpha_feasible(t: AlphaTemplate, alpha: Fraction) -> bool:
    """Every constraint holds at α and β = α - 1/2 is positive."""
    alpha = Fraction(alpha)
    return alpha > Fraction(1, 2) and all(c.holds(alpha) for c in t.constraints)


def solve_alpha(t: AlphaTemplate) -> AlphaSolution:
    """Minimal α satisfying every affine constraint."""
    check_template_identity(t)
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    for c in t.constraints:
        p, q = c.coeff.p, c.coeff.q
        if p == 0:
            if q < c.bound:
                raise DomainError(f"constraint {c.label or c.coeff} can never hold")
            continue
        edge = (c.bound - q) / p
        if p > 0:
            lower = edge if lower is None else max(lower, edge)
        else:
            upper = edge if upper is None else min(upper, edge)
    if lower is None:
        raise DomainError("alpha constraints have no lower bound; the minimum is not attained")
    if upper is not None and lower > upper:
        raise DomainError(
            f"alpha constraints are infeasible: need alpha >= {lower} and alpha <= {upper}"
        )
    if lower <= Fraction(1, 2):
        raise DomainError(f"minimal alpha {lower} leaves beta = alpha - 1/2 nonpositive")
    logger.debug("alpha.solve", id=t.id, alpha=str(lower))
    return AlphaSolution(alpha_min=lower, two_alpha=2 * lower)


def describe_template(t: AlphaTemplate) -> List[str]:
    """Human-readable rewrite of the template."""
    lat = t.lattice
    lines = [
        f"-K = {format_class(lat, t.anticanonical)}, f*(-K_S) = {format_class(lat, t.base_pullback)}"
    ]
    for rp in t.rewrite_pieces:
        lines.append(f"  ({rp.coeff}) * ({format_class(lat, rp.piece)})")
    for c in t.constraints:
        lines.append(f"  constraint {c.label}: {c.coeff} >= {format_rational(c.bound)}")
    return lines
