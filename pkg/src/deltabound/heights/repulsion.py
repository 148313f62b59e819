"""Empirical repulsion scan: min over pairs of dist²(P, Q)·(H(P)H(Q))^{2(δ+ε)}."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog

from deltabound.config.settings import EnumerationConfig
from deltabound.core.errors import DomainError
from deltabound.heights.counting import PointSet, collect_points
from deltabound.heights.distance import wedge_terms
from deltabound.models.variety import VarietyModel

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class RepulsionResult:
    """Minimal product over distinct pairs with height ≤ T.

    ``min_product`` is the ``power``-th power of dist²·(H(P)H(Q))^{2(δ+ε)}; power > 1
    only when 2(δ+ε) is not an integer.
    """

    T: int
    min_product: Fraction
    power: int
    p_coords: Tuple[int, ...]
    q_coords: Tuple[int, ...]
    pairs_rechecked: int

    def as_row(self) -> dict:
        return {
            "T": self.T,
            "min_product_num": self.min_product.numerator,
            "min_product_den": self.min_product.denominator,
            "p_coords": " ".join(str(x) for x in self.p_coords),
            "q_coords": " ".join(str(x) for x in self.q_coords),
        }


def repulsion_exponent(delta: Fraction, eps: Fraction) -> Fraction:
    delta, eps = Fraction(delta), Fraction(eps)
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {delta}")
    if eps < 0:
        raise DomainError(f"eps must be nonnegative, got {eps}")
    return 2 * (delta + eps)


def _exact_value(
    x: Sequence[int], y: Sequence[int], hx: int, hy: int, exponent: Fraction
) -> Fraction:
    """(dist² · (hx·hy)^{p/q})^q with exponent = p/q."""
    nx, ny, wedge = wedge_terms(x, y)
    p, q = exponent.numerator, exponent.denominator
    return Fraction(wedge**q * (hx * hy) ** p, (nx * ny) ** q)


def _log_block(
    rows: np.ndarray,
    points: np.ndarray,
    norms: np.ndarray,
    log_heights: np.ndarray,
    start: int,
    exponent: float,
) -> np.ndarray:
    """log(dist²·(HH)^e) for rows start..start+len(rows) against every point."""
    dots = rows @ points.T
    nx = norms[start : start + rows.shape[0], None]
    wedge = nx * norms[None, :] - dots * dots
    with np.errstate(divide="ignore"):
        logs = (
            np.log(wedge.astype(np.float64))
            - np.log(nx.astype(np.float64))
            - np.log(norms[None, :].astype(np.float64))
            + exponent * (log_heights[start : start + rows.shape[0], None] + log_heights[None, :])
        )
    # only pairs j > i
    cols = np.arange(points.shape[0])[None, :]
    own = np.arange(start, start + rows.shape[0])[:, None]
    logs[cols <= own] = np.inf
    return logs


def scan_point_set(
    point_set: PointSet,
    delta: Fraction,
    eps: Fraction,
    rel_tol: float = 1e-9,
    block_size: int = 1 << 20,
) -> RepulsionResult:
    """Repulsion minimum over the distinct pairs of ``point_set``.

    A float64 pass in log space keeps every pair within ``rel_tol`` of the running
    minimum; those candidates are then compared exactly.
    """
    exponent = repulsion_exponent(delta, eps)
    points = point_set.points
    count = points.shape[0]
    if count < 2:
        raise DomainError(f"repulsion needs at least 2 points of height <= {point_set.T}, found {count}")

    heights = np.array(point_set.heights, dtype=np.float64)
    log_heights = np.log(heights)
    norms = (points * points).sum(axis=1)
    e = float(exponent)
    rows_per_block = max(1, block_size // count)

    best = np.inf
    candidates: List[Tuple[float, int, int]] = []
    for start in range(0, count - 1, rows_per_block):
        rows = points[start : start + rows_per_block]
        logs = _log_block(rows, points, norms, log_heights, start, e)
        block_min = float(logs.min())
        best = min(best, block_min)
        window = best + rel_tol * max(1.0, abs(best))
        i, j = np.nonzero(logs <= window)
        candidates.extend(zip(logs[i, j].tolist(), (i + start).tolist(), j.tolist()))
        if len(candidates) > 4 * block_size:
            candidates = [c for c in candidates if c[0] <= window]

    window = best + rel_tol * max(1.0, abs(best))
    finalists = [(i, j) for value, i, j in candidates if value <= window]
    int_heights = point_set.heights
    rows = points.tolist()
    winner: Optional[Tuple[Fraction, int, int]] = None
    for i, j in finalists:
        value = _exact_value(rows[i], rows[j], int_heights[i], int_heights[j], exponent)
        if winner is None or (value, i, j) < winner:
            winner = (value, i, j)

    value, i, j = winner
    logger.info(
        "repulsion.scan",
        model=point_set.model.label,
        T=point_set.T,
        points=count,
        rechecked=len(finalists),
        min_product=str(value),
    )
    return RepulsionResult(
        T=point_set.T,
        min_product=value,
        power=exponent.denominator,
        p_coords=tuple(rows[i]),
        q_coords=tuple(rows[j]),
        pairs_rechecked=len(finalists),
    )


def repulsion_scan(
    model: VarietyModel,
    delta: Fraction,
    eps: Fraction,
    T: int,
    config: Optional[EnumerationConfig] = None,
    rel_tol: float = 1e-9,
) -> RepulsionResult:
    """Minimum of dist²(P, Q)·(H(P)H(Q))^{2(δ+ε)} over distinct pairs of height ≤ T."""
    repulsion_exponent(delta, eps)
    config = config or EnumerationConfig()
    point_set = collect_points(model, T, config)
    return scan_point_set(point_set, delta, eps, rel_tol=rel_tol, block_size=config.block_size)


def repulsion_series(
    model: VarietyModel,
    delta: Fraction,
    eps: Fraction,
    T_list: Sequence[int],
    config: Optional[EnumerationConfig] = None,
    rel_tol: float = 1e-9,
) -> List[RepulsionResult]:
    """One scan per T, enumerating once at the largest T."""
    if not T_list:
        return []
    config = config or EnumerationConfig()
    top = collect_points(model, max(T_list), config)
    return [
        scan_point_set(top.up_to(T), delta, eps, rel_tol=rel_tol, block_size=config.block_size)
        for T in T_list
    ]
