"""Exact lattice arithmetic, cones and the a-invariant."""

from deltabound.lattice.cones import (
    A_INFINITY,
    ConeMembershipWitness,
    check_conjecture_a_vs_delta,
    delta_upper_via_a,
    fujita_a,
    is_pseudo_effective,
)
from deltabound.lattice.core import (
    CurveClass,
    DivisorClass,
    IntersectionLattice,
    effective_generators,
    format_class,
    intersect,
    is_nef,
    make_del_pezzo_lattice,
    make_lattice,
    negative_curves,
    parse_lattice_spec,
)
from deltabound.lattice.simplex import LPResult, LPStatus, RationalSimplex

__all__ = [
    "A_INFINITY",
    "ConeMembershipWitness",
    "CurveClass",
    "DivisorClass",
    "IntersectionLattice",
    "LPResult",
    "LPStatus",
    "RationalSimplex",
    "check_conjecture_a_vs_delta",
    "delta_upper_via_a",
    "effective_generators",
    "format_class",
    "fujita_a",
    "intersect",
    "is_nef",
    "is_pseudo_effective",
    "make_del_pezzo_lattice",
    "make_lattice",
    "negative_curves",
    "parse_lattice_spec",
]
