"""Counting-bound statements and certificate verification for table entries."""

from fractions import Fraction
from typing import Dict, List, Optional

import structlog

from deltabound.certificates.alpha import AlphaTemplate, solve_alpha
from deltabound.certificates.checks import LowerCert, UpperCert, check_upper_cert, lower_cert_report
from deltabound.certificates.io import Certificate
from deltabound.core.errors import DomainError
from deltabound.fano.database import default_database
from deltabound.models.fano import BoundSource, BoundStatement, FanoEntry
from deltabound.models.report import AssumptionRecord, CheckRecord, ReportStatus, VerificationReport
from deltabound.models.values import TableValue, ValueKind, format_rational

logger = structlog.get_logger(__name__)

FANO_DIMENSION = 3


def bound_anticanonical(entry: FanoEntry) -> List[BoundStatement]:
    """Both applicable bounds for L = -K_X, the smallest exponent flagged best.

    The general bound has exponent 2nδ = 6δ; the conic-bundle bound has exponent 2α.
    Upper-bound cells give valid exponents through their upper end.
    """
    statements = [
        BoundStatement(
            exponent=2 * FANO_DIMENSION * entry.delta.upper_end,
            source=BoundSource.GENERAL_2N_DELTA,
            note=None if entry.six_delta.is_exact else f"6delta is only known as {entry.six_delta}",
        )
    ]
    if entry.two_alpha is not None:
        statements.append(
            BoundStatement(
                exponent=entry.two_alpha.upper_end,
                source=BoundSource.CONIC_ALPHA,
                note=None if entry.two_alpha.is_exact else f"2alpha is only known as {entry.two_alpha}",
            )
        )
    # ties keep the general statement
    best = min(range(len(statements)), key=lambda i: (statements[i].exponent, i))
    return [s.model_copy(update={"best": i == best}) for i, s in enumerate(statements)]


def best_bound(entry: FanoEntry) -> BoundStatement:
    return next(s for s in bound_anticanonical(entry) if s.best)


def bound_twisted_delta(delta: Fraction, t: Fraction) -> BoundStatement:
    """Exponent 2δ for L = -K_X - t·f*K_S, provided t ≥ 1/(2δ(X, -K_X))."""
    delta, t = Fraction(delta), Fraction(t)
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {format_rational(delta)}")
    threshold = 1 / (2 * delta)
    if t < threshold:
        raise DomainError(
            f"hypothesis t >= 1/(2 delta(X, -K_X)) fails: t = {format_rational(t)}, "
            f"1/(2 delta) = {format_rational(threshold)}"
        )
    note = None
    if delta == Fraction(1, 2):
        note = "delta(X, -K_X) = 1/2: the bound has the expected linear growth, weak Manin holds for (X, L)"
    return BoundStatement(exponent=2 * delta, source=BoundSource.TWISTED, best=True, note=note)


def bound_twisted(entry: FanoEntry, t: Fraction) -> BoundStatement:
    if not entry.six_delta.is_exact:
        raise DomainError(
            f"entry {entry.key} has 6delta = {entry.six_delta}; the twisted bound needs an exact delta"
        )
    return bound_twisted_delta(entry.delta.value, t)


def _matches(cell: TableValue, observed: Fraction) -> bool:
    if cell.kind == ValueKind.EXACT:
        return observed == cell.value
    if cell.kind == ValueKind.UPPER:
        return observed <= cell.value
    return cell.lower <= observed <= cell.value


def _failed(name: str, expected: str, error: Exception) -> CheckRecord:
    return CheckRecord(name=name, expected=expected, observed=f"error: {error}", passed=False)


def verify_entry(
    entry: FanoEntry, certificates: Optional[Dict[str, Optional[Certificate]]] = None
) -> VerificationReport:
    """Re-run the entry's certificates and compare with the stored 6δ and 2α.

    Certificates default to the bundled ones. Certificate failures become mismatches
    in the report.
    """
    if not entry.certificates:
        raise DomainError(f"entry {entry.key} carries no certificates")
    if certificates is None:
        certificates = default_database().certificates_for(entry)

    checks: List[CheckRecord] = []
    identities: List[str] = []
    assumptions: List[AssumptionRecord] = []
    delta = entry.delta

    for cid in entry.certificates:
        cert = certificates.get(cid)
        if cert is None:
            checks.append(
                CheckRecord(name=cid, expected="certificate", observed="missing", passed=False)
            )
            continue
        if isinstance(cert, LowerCert):
            name, expected = f"{cid}: delta lower bound", str(delta)
            try:
                report = lower_cert_report(cert)
            except DomainError as e:
                checks.append(_failed(name, expected, e))
                continue
            observed = report.value
            passed = observed == delta.value if delta.is_exact else observed <= delta.upper_end
        elif isinstance(cert, UpperCert):
            name, expected = f"{cid}: delta upper bound", str(delta)
            try:
                report = check_upper_cert(cert)
            except DomainError as e:
                checks.append(_failed(name, expected, e))
                continue
            observed = report.value
            passed = observed == delta.value if delta.is_exact else observed <= delta.upper_end
        elif isinstance(cert, AlphaTemplate):
            expected = "none" if entry.two_alpha is None else str(entry.two_alpha)
            name = f"{cid}: 2alpha"
            try:
                solution = solve_alpha(cert)
            except DomainError as e:
                checks.append(_failed(name, expected, e))
                continue
            observed = solution.two_alpha
            passed = entry.two_alpha is not None and _matches(entry.two_alpha, observed)
            identities.append(
                f"{cid}: minimal alpha = {format_rational(solution.alpha_min)}, "
                f"2alpha = {format_rational(observed)}"
            )
            checks.append(
                CheckRecord(
                    name=name, expected=expected, observed=format_rational(observed), passed=passed
                )
            )
            continue
        else:
            checks.append(
                CheckRecord(name=cid, expected="certificate", observed=type(cert).__name__, passed=False)
            )
            continue
        identities.extend(report.identities)
        assumptions.extend(report.assumptions)
        checks.append(
            CheckRecord(name=name, expected=expected, observed=format_rational(observed), passed=passed)
        )

    notes = []
    if entry.two_alpha is not None and entry.two_alpha.is_exact and entry.six_delta.is_exact:
        relation = "<=" if entry.two_alpha.value <= entry.six_delta.value else ">"
        notes.append(
            f"2alpha = {entry.two_alpha} {relation} 6delta = {entry.six_delta} (reported, not asserted)"
        )

    status = ReportStatus.CERTIFIED if all(c.passed for c in checks) else ReportStatus.MISMATCH
    logger.info("fano.verify", entry=entry.key, status=status.value, checks=len(checks))
    return VerificationReport(
        subject=f"Fano {entry.key}",
        status=status,
        identities=identities,
        assumptions=assumptions,
        checks=checks,
        notes=notes,
        conclusion=f"6delta = {entry.six_delta}, 2alpha = {entry.two_alpha}",
        value=delta.value if delta.is_exact else None,
    )
