"""Lower and upper certificates for the δ-invariant."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import structlog

from deltabound.certificates.wclasses import WCurve, WDivisor, pair_w
from deltabound.core.errors import CertificateError, DomainError
from deltabound.lattice.core import DivisorClass, IntersectionLattice, format_class, intersect
from deltabound.models.report import AssumptionRecord, ReportStatus, VerificationReport
from deltabound.models.values import DeltaInterval, DeltaValue, delta_bounds, format_rational

logger = structlog.get_logger(__name__)


class AssumptionTag(str, Enum):
    """Kinds of geometric input a decomposition piece relies on."""

    SEMIAMPLE = "SEMIAMPLE"
    BIRATIONAL_SYSTEM = "BIRATIONAL_SYSTEM"
    CONIC_DELTA = "CONIC_DELTA"
    FACTOR_PULLBACK = "FACTOR_PULLBACK"


@dataclass(frozen=True)
class DecompositionPiece:
    """coefficient · piece, with the assumption that controls its base locus."""

    coefficient: Fraction
    piece: WDivisor
    assumption_tag: AssumptionTag
    citation: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "assumption_tag", AssumptionTag(self.assumption_tag))


@dataclass(frozen=True)
class LowerCert:
    """A covering family of curves on W′ giving δ(X, H) ≥ s₀."""

    lattice: IntersectionLattice
    H: DivisorClass
    curve: WCurve
    dominance_note: str
    id: str = ""


@dataclass(frozen=True)
class UpperCert:
    """Exact decompositions of a target sH[2] - E into pieces with known base loci."""

    lattice: IntersectionLattice
    target: WDivisor
    polarization: DivisorClass
    decompositions: Tuple[Tuple[DecompositionPiece, ...], ...]
    id: str = ""
    notes: Tuple[str, ...] = field(default=())


def check_lower_cert(cert: LowerCert) -> Fraction:
    """s₀ = m / (H·c1 + H·c2), checked to make s₀H[2] - E vanish on the curve."""
    lat, curve = cert.lattice, cert.curve
    degree = intersect(lat, cert.H, curve.c1) + intersect(lat, cert.H, curve.c2)
    if degree == 0:
        raise DomainError("lower certificate has H·c1 + H·c2 = 0")
    if degree < 0:
        raise DomainError(f"lower certificate has negative H-degree {degree}")
    s0 = curve.m / degree
    if pair_w(lat, WDivisor.sym(cert.H * s0, -1), curve) != 0:
        raise CertificateError("lower certificate pairing does not vanish at s0")
    logger.debug("cert.lower", id=cert.id, s0=str(s0))
    return s0


def lower_cert_report(cert: LowerCert) -> VerificationReport:
    """Report form of :func:`check_lower_cert`, carrying the dominance note."""
    s0 = check_lower_cert(cert)
    lat = cert.lattice
    h = format_class(lat, cert.H)
    return VerificationReport(
        subject=cert.id or "lower certificate",
        identities=[
            f"H·c1 + H·c2 = {format_rational(cert.curve.m / s0)} with H = {h}",
            f"({format_rational(s0)}·H)[2] - E pairs to 0 with the curve (m = {format_rational(cert.curve.m)})",
        ],
        assumptions=[AssumptionRecord(tag="DOMINANT_FAMILY", citation=cert.dominance_note)],
        conclusion=f"delta >= {format_rational(s0)}",
        value=s0,
    )


def _target_coefficient(cert: UpperCert) -> Fraction:
    target, h = cert.target, cert.polarization
    if not target.is_symmetric:
        raise CertificateError("target must have equal factor classes")
    if target.e >= 0:
        raise CertificateError("target must have a negative E-coefficient")
    pivot = next((i for i, c in enumerate(h.coords) if c != 0), None)
    if pivot is None:
        raise CertificateError("polarization is zero")
    scale = target.d1.coords[pivot] / h.coords[pivot]
    if scale <= 0 or target.d1 != h * scale:
        raise CertificateError(
            "target factor is not a positive multiple of the polarization",
            residual=format_class(cert.lattice, target.d1 - h * scale),
        )
    return scale / -target.e


def check_upper_cert(cert: UpperCert) -> VerificationReport:
    """Verify every decomposition exactly and conclude δ ≤ s modulo the assumptions."""
    lat = cert.lattice
    if not cert.decompositions:
        raise CertificateError("upper certificate has no decompositions")

    identities: List[str] = []
    assumptions: List[AssumptionRecord] = []
    seen = set()
    for n, decomposition in enumerate(cert.decompositions, start=1):
        total = WDivisor.zero(lat.rank)
        terms: List[str] = []
        for piece in decomposition:
            if piece.coefficient < 0:
                raise CertificateError(
                    f"decomposition {n} has negative coefficient {piece.coefficient}"
                )
            total = total + piece.piece * piece.coefficient
            rendered = piece.piece.render(lat)
            terms.append(f"{format_rational(piece.coefficient)}·[{rendered}]")
            key = (piece.assumption_tag, piece.citation, rendered)
            if key not in seen:
                seen.add(key)
                assumptions.append(
                    AssumptionRecord(
                        tag=piece.assumption_tag.value, citation=piece.citation, piece=rendered
                    )
                )
        residual = cert.target - total
        if not residual.is_zero():
            raise CertificateError(
                f"decomposition {n} does not reproduce the target", residual=residual.render(lat)
            )
        identities.append(f"{cert.target.render(lat)} = " + " + ".join(terms))

    s = _target_coefficient(cert)
    logger.debug("cert.upper", id=cert.id, s=str(s), decompositions=len(cert.decompositions))
    return VerificationReport(
        subject=cert.id or "upper certificate",
        status=ReportStatus.CERTIFIED,
        identities=identities,
        assumptions=assumptions,
        notes=list(cert.notes),
        conclusion=f"delta <= {format_rational(s)}",
        value=s,
    )


def product_delta(delta_S: DeltaValue) -> DeltaValue:
    """δ(ℙ¹ × S, -K) = δ(S, -K_S), valid when δ(S, -K_S) ≥ 1/2."""
    lower, _ = delta_bounds(delta_S)
    if lower < Fraction(1, 2):
        raise DomainError(
            f"product formula needs delta(S, -K_S) >= 1/2, got lower end {format_rational(lower)}"
        )
    return delta_S


def seshadri_lower_bound(epsilon: Fraction) -> Fraction:
    """δ(X, L) ≥ 1/ε(L, P) for a Seshadri constant at a general point."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError("Seshadri constant must be positive")
    return 1 / epsilon


def combine_bounds(lower: Fraction, upper: Fraction) -> DeltaValue:
    """Exact value when the certified ends meet, else the interval."""
    if lower > upper:
        raise CertificateError(
            f"lower bound {format_rational(lower)} exceeds upper bound {format_rational(upper)}"
        )
    if lower == upper:
        return lower
    return DeltaInterval(lower=lower, upper=upper)
