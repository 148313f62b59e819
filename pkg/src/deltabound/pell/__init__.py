"""Pell solvers and the K3 / Enriques s-invariants."""

from deltabound.pell.k3 import (
    SBranch,
    SInvariantResult,
    SValue,
    enriques_bound,
    enriques_exponent,
    enriques_s_from_phi,
    k3_exponent,
    k3_s_invariant,
)
from deltabound.pell.solvers import PellSolution, pell_fundamental, pell_general_min_even

__all__ = [
    "PellSolution",
    "SBranch",
    "SInvariantResult",
    "SValue",
    "enriques_bound",
    "enriques_exponent",
    "enriques_s_from_phi",
    "k3_exponent",
    "k3_s_invariant",
    "pell_fundamental",
    "pell_general_min_even",
]
