"""δ certificates on the diagonal blow-up of X × X and the α solver."""

from deltabound.certificates.alpha import (
    Affine,
    AffineConstraint,
    AlphaSolution,
    AlphaTemplate,
    RewritePiece,
    alpha_feasible,
    solve_alpha,
)
from deltabound.certificates.checks import (
    AssumptionTag,
    DecompositionPiece,
    LowerCert,
    UpperCert,
    check_lower_cert,
    check_upper_cert,
    lower_cert_report,
    product_delta,
    seshadri_lower_bound,
)
from deltabound.certificates.delpezzo import DelPezzoDelta, delpezzo_delta
from deltabound.certificates.io import dump_certificates, load_certificates
from deltabound.certificates.wclasses import WCurve, WDivisor, pair_w

__all__ = [
    "Affine",
    "AffineConstraint",
    "AlphaSolution",
    "AlphaTemplate",
    "AssumptionTag",
    "DecompositionPiece",
    "DelPezzoDelta",
    "LowerCert",
    "RewritePiece",
    "UpperCert",
    "WCurve",
    "WDivisor",
    "alpha_feasible",
    "check_lower_cert",
    "check_upper_cert",
    "delpezzo_delta",
    "dump_certificates",
    "load_certificates",
    "lower_cert_report",
    "pair_w",
    "product_delta",
    "seshadri_lower_bound",
    "solve_alpha",
]
