"""DeltaBound - exact invariants and point counts for rational points of bounded height.

Exact-arithmetic computation of the δ, a and s invariants of polarized varieties,
the counting exponents they imply, and empirical enumeration of rational points
over ℚ to check those exponents.
"""

__version__ = "0.1.0"
__author__ = "DeltaBound"

from deltabound.core.pipeline import DeltaBoundPipeline

__all__ = ["DeltaBoundPipeline"]
