"""Certificates for δ(S, -K_S) on del Pezzo surfaces of degree 1..9."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from deltabound.certificates.checks import (
    AssumptionTag,
    DecompositionPiece,
    LowerCert,
    UpperCert,
    check_upper_cert,
    combine_bounds,
    lower_cert_report,
)
from deltabound.certificates.wclasses import WCurve, WDivisor
from deltabound.core.errors import DomainError
from deltabound.lattice.core import (
    DivisorClass,
    IntersectionLattice,
    as_curve,
    format_class,
    make_del_pezzo_lattice,
)
from deltabound.models.report import VerificationReport
from deltabound.models.values import DeltaValue

_CONIC = "the pencil |{cls}| is a conic fibration; the stable locus of {cls}[2] - E is the locus of pairs in a common fiber"
_BIRATIONAL = "|{cls}| maps S birationally onto its image, so {cls}[2] - E has no dominant stable component off E"
_SEMIAMPLE = "{cls} is base point free, so {cls}[2] is semiample"
_PULLBACK = "{cls} is the pullback of -K of the del Pezzo surface of degree {degree} obtained by contracting {curve}; its delta certificate makes the piece non-dominant off E"


def _cls(lat: IntersectionLattice, h: int, minus: Dict[int, int]) -> DivisorClass:
    """hH - Σ minus[i]·Ei."""
    r = lat.rank - 1
    return lat.divisor(h, *(-minus.get(i, 0) for i in range(1, r + 1)))


def _points(*indices: int) -> Dict[int, int]:
    return {i: 1 for i in indices}


def _label(lat: IntersectionLattice, d: DivisorClass) -> str:
    return format_class(lat, d)


def _piece(
    lat: IntersectionLattice,
    coefficient: int,
    d: DivisorClass,
    e: Fraction,
    tag: AssumptionTag,
    template: str,
    **extra: object,
) -> DecompositionPiece:
    return DecompositionPiece(
        coefficient=Fraction(coefficient),
        piece=WDivisor.sym(d, e),
        assumption_tag=tag,
        citation=template.format(cls=_label(lat, d), **extra),
    )


def lower_certificate(degree: int) -> LowerCert:
    """Covering curves through the moving point, realizing the Seshadri-type bound."""
    r = _blowups(degree)
    lat = make_del_pezzo_lattice(r)
    minus_k = lat.anticanonical
    zero = as_curve(DivisorClass.zero(lat.rank))
    if r == 0:
        curve = WCurve(zero, as_curve(lat.divisor(1)), 1)
        note = "lines through a general point cover P^2"
    elif r <= 5:
        curve = WCurve(zero, as_curve(_cls(lat, 1, _points(1))), 1)
        note = "the conics of |H - E1| through a general point cover S; -K has degree 2 on them"
    elif r == 6:
        curve = WCurve(zero, as_curve(minus_k), 2)
        note = "tangent hyperplane sections of the cubic surface, singular at the moving point, cover S"
    elif r == 7:
        curve = WCurve(as_curve(minus_k), as_curve(minus_k), 4)
        note = (
            "graphs of the anticanonical double-cover involution over curves in |-K| cover W'; "
            "they meet the diagonal along the ramification curve in |-2K|"
        )
    else:
        curve = WCurve(as_curve(2 * minus_k), as_curve(2 * minus_k), 6)
        note = (
            "graphs of the Bertini involution over curves in |-2K| cover W'; "
            "they meet the diagonal along the ramification curve in |-3K|"
        )
    return LowerCert(
        lattice=lat, H=minus_k, curve=curve, dominance_note=note, id=f"delpezzo-{degree}-lower"
    )


def _conic_birational_pair(lat: IntersectionLattice, first: int) -> Tuple[DecompositionPiece, ...]:
    """(H - E_first)[2] - E plus the birational conic system through the other points."""
    r = lat.rank - 1
    rest = [i for i in range(1, r + 1) if i != first]
    conic = _cls(lat, 1, _points(first))
    other = _cls(lat, 2, _points(*rest))
    return (
        _piece(lat, 1, conic, Fraction(-1), AssumptionTag.CONIC_DELTA, _CONIC),
        _piece(lat, 1, other, Fraction(-1), AssumptionTag.BIRATIONAL_SYSTEM, _BIRATIONAL),
    )


def upper_certificate(degree: int) -> UpperCert:
    """Decompositions of a multiple of (s·(-K))[2] - E into controlled pieces."""
    r = _blowups(degree)
    lat = make_del_pezzo_lattice(r)
    minus_k = lat.anticanonical
    decompositions: List[Tuple[DecompositionPiece, ...]] = []
    notes: List[str] = []

    if r == 0:
        target = WDivisor.sym(minus_k, -3)
        line = lat.divisor(1)
        decompositions.append(
            (_piece(lat, 3, line, Fraction(-1), AssumptionTag.BIRATIONAL_SYSTEM, _BIRATIONAL),)
        )
    elif r == 1:
        target = WDivisor.sym(minus_k, -2)
        h = lat.divisor(1, 0)
        decompositions.append(
            (
                _piece(lat, 2, h, Fraction(-1), AssumptionTag.BIRATIONAL_SYSTEM, _BIRATIONAL),
                _piece(lat, 1, _cls(lat, 1, _points(1)), Fraction(0), AssumptionTag.SEMIAMPLE, _SEMIAMPLE),
            )
        )
    elif r <= 4:
        target = WDivisor.sym(minus_k, -2)
        decompositions.append(_conic_birational_pair(lat, 1))
        decompositions.append(_conic_birational_pair(lat, 2))
        notes.append("the two conic pencils share no fibers, so the deltas meet only over E")
    elif r == 5:
        target = WDivisor.sym(minus_k, -2)
        for b in (5, 4):
            big = _cls(lat, 2, _points(*(i for i in range(1, 6) if i != b)))
            small = _cls(lat, 1, _points(b))
            decompositions.append(
                (
                    _piece(lat, 1, big, Fraction(-1), AssumptionTag.CONIC_DELTA, _CONIC),
                    _piece(lat, 1, small, Fraction(-1), AssumptionTag.CONIC_DELTA, _CONIC),
                )
            )
        notes.append("any dominant component common to both decompositions lies in E")
    elif r == 6:
        target = WDivisor.sym(2 * minus_k, -3)
        for pair, conic_points in (((5, 6), (1, 2, 3, 4)), ((4, 6), (1, 2, 3, 5))):
            line = _cls(lat, 1, _points(*pair))
            conic = _cls(lat, 2, _points(*conic_points))
            d = minus_k + line
            decompositions.append(
                (
                    _piece(
                        lat, 1, d, Fraction(-2), AssumptionTag.BIRATIONAL_SYSTEM,
                        _PULLBACK, degree=4, curve=_label(lat, line),
                    ),
                    _piece(lat, 1, conic, Fraction(-1), AssumptionTag.CONIC_DELTA, _CONIC),
                )
            )
        notes.append("D = -2K - F1 = -K + E is the pullback of -K of a degree 4 surface")
    elif r == 7:
        target = WDivisor.sym(3 * minus_k, -3)
        conic = _cls(lat, 2, _points(1, 2, 3, 4, 5))
        line = _cls(lat, 1, _points(6, 7))
        decompositions.append(
            tuple(
                _piece(
                    lat, 1, minus_k + curve, Fraction(-3, 2), AssumptionTag.FACTOR_PULLBACK,
                    _PULLBACK, degree=3, curve=_label(lat, curve),
                )
                for curve in (conic, line)
            )
        )
        notes.append("-K ~ E_a + E_b for two disjoint (-1)-curves, so -3K ~ f_a*(-K) + f_b*(-K)")
    else:
        target = WDivisor.sym(4 * minus_k, -2)
        exceptional = lat.basis_divisor("E8")
        bertini = 2 * minus_k - exceptional
        decompositions.append(
            tuple(
                _piece(
                    lat, 1, minus_k + curve, Fraction(-1), AssumptionTag.FACTOR_PULLBACK,
                    _PULLBACK, degree=2, curve=_label(lat, curve),
                )
                for curve in (exceptional, bertini)
            )
        )
        notes.append("-2K ~ E8 + (-2K - E8), a Bertini pair of (-1)-curves")

    return UpperCert(
        lattice=lat,
        target=target,
        polarization=minus_k,
        decompositions=tuple(decompositions),
        id=f"delpezzo-{degree}-upper",
        notes=tuple(notes),
    )


def _blowups(degree: int) -> int:
    if isinstance(degree, bool) or not isinstance(degree, int) or not 1 <= degree <= 9:
        raise DomainError(f"del Pezzo degree must be in 1..9, got {degree!r}")
    return 9 - degree


@dataclass(frozen=True)
class DelPezzoDelta:
    """Certified δ(S, -K_S) with the two supporting reports."""

    degree: int
    delta: DeltaValue
    lower: VerificationReport
    upper: VerificationReport


def delpezzo_delta(degree: int) -> DelPezzoDelta:
    """Run both certificates for a degree and combine their bounds."""
    lower = lower_cert_report(lower_certificate(degree))
    upper = check_upper_cert(upper_certificate(degree))
    return DelPezzoDelta(
        degree=degree,
        delta=combine_bounds(lower.value, upper.value),
        lower=lower,
        upper=upper,
    )
