"""Least-squares growth exponent of a counting table (diagnostic, floating point)."""

from typing import NamedTuple

import numpy as np

from deltabound.core.errors import DomainError
from deltabound.models.variety import CountTable


class FitResult(NamedTuple):
    slope: float
    r_squared: float
    rows_used: int


def fit_exponent(table: CountTable) -> FitResult:
    """Slope of log N against log T over the upper half of the log T range."""
    pairs = [(t, c) for t, c in table.pairs() if c > 0]
    if len(pairs) < 3:
        raise DomainError(f"fit_exponent needs at least 3 rows with positive counts, got {len(pairs)}")
    log_t = np.log(np.array([t for t, _ in pairs], dtype=np.float64))
    log_n = np.log(np.array([c for _, c in pairs], dtype=np.float64))

    midpoint = (log_t[0] + log_t[-1]) / 2
    upper = log_t >= midpoint
    if upper.sum() < 2:
        upper = np.zeros_like(upper)
        upper[-2:] = True
    x, y = log_t[upper], log_n[upper]

    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = y - y.mean()
    ss_tot = float(total @ total)
    r_squared = 1.0 if ss_tot == 0 else 1.0 - float(residual @ residual) / ss_tot
    return FitResult(float(slope), r_squared, int(upper.sum()))
