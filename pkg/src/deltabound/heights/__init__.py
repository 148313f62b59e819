"""Rational points of bounded height: enumeration, counting and repulsion."""

from deltabound.heights.counting import (
    PointSet,
    collect_points,
    counting_series,
    enumerate_points,
    geometric_steps,
)
from deltabound.heights.distance import proj_distance, triangle_holds
from deltabound.heights.enumerate import (
    PointEnumerator,
    SieveEnumerator,
    ShellEnumerator,
    select_enumerator,
)
from deltabound.heights.fit import FitResult, fit_exponent
from deltabound.heights.model import (
    BUNDLED_MODELS,
    bundled_model,
    compile_variety,
    load_variety,
    parse_variety,
)
from deltabound.heights.polynomial import Polynomial, parse_polynomial
from deltabound.heights.repulsion import RepulsionResult, repulsion_scan, repulsion_series

__all__ = [
    "BUNDLED_MODELS",
    "FitResult",
    "PointEnumerator",
    "PointSet",
    "Polynomial",
    "RepulsionResult",
    "ShellEnumerator",
    "SieveEnumerator",
    "bundled_model",
    "collect_points",
    "compile_variety",
    "counting_series",
    "enumerate_points",
    "fit_exponent",
    "geometric_steps",
    "load_variety",
    "parse_polynomial",
    "parse_variety",
    "proj_distance",
    "repulsion_scan",
    "repulsion_series",
    "select_enumerator",
    "triangle_holds",
]
