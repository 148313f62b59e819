"""Counting functions N(U, L, T) and point streams."""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

import numpy as np
import structlog

from deltabound.config.settings import EnumerationConfig
from deltabound.core.errors import DomainError, ResourceLimitError
from deltabound.core.intmath import integer_root
from deltabound.heights.enumerate import select_enumerator, shells
from deltabound.heights.model import compile_variety
from deltabound.heights.parallel import scan_shards
from deltabound.models.variety import CountTable, PointRecord, VarietyModel

logger = structlog.get_logger(__name__)


def _check_height(T: int) -> int:
    if isinstance(T, bool) or not isinstance(T, (int, np.integer)) or T < 1:
        raise DomainError(f"height bound T must be an integer >= 1, got {T!r}")
    return int(T)


def shell_bound(model: VarietyModel, T: int) -> int:
    """Largest B with B^m ≤ T."""
    return integer_root(_check_height(T), model.height_power)


@dataclass
class PointSet:
    """Every point of height ≤ T, rows in lexicographic order."""

    model: VarietyModel
    T: int
    points: np.ndarray

    @property
    def shells(self) -> np.ndarray:
        return shells(self.points)

    @property
    def heights(self) -> List[int]:
        m = self.model.height_power
        return [int(s) ** m for s in self.shells]

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def up_to(self, T: int) -> "PointSet":
        bound = shell_bound(self.model, T)
        return PointSet(self.model, T, self.points[self.shells <= bound])

    def records(self) -> Iterator[PointRecord]:
        m = self.model.height_power
        for row in self.points.tolist():
            yield PointRecord(tuple(row), max(abs(x) for x in row) ** m)


def collect_points(
    model: VarietyModel,
    T: int,
    config: Optional[EnumerationConfig] = None,
    strategy: str = "auto",
) -> PointSet:
    """All points of height ≤ T, merged across shards in shard order."""
    bound = shell_bound(model, T)
    enumerator = select_enumerator(compile_variety(model), config, strategy)
    parts = [p for p in scan_shards(enumerator, bound) if p.shape[0]]
    points = np.concatenate(parts) if parts else np.empty((0, model.nvars), dtype=np.int64)
    logger.info("enumerate.done", model=model.label, T=T, points=points.shape[0])
    return PointSet(model, int(T), points)


def enumerate_points(
    model: VarietyModel,
    T: int,
    config: Optional[EnumerationConfig] = None,
    strategy: str = "auto",
) -> Iterator[PointRecord]:
    """Stream the points of height ≤ T in lexicographic order, one shard at a time.

    Raises:
        ResourceLimitError: when the candidate grid or the emitted points exceed the caps.
    """
    bound = shell_bound(model, T)
    enumerator = select_enumerator(compile_variety(model), config, strategy)
    enumerator.check_budget(bound)
    m = model.height_power
    emitted = 0
    for shard in enumerator.shards(bound):
        for row in enumerator.scan_shard(shard).tolist():
            emitted += 1
            if emitted > enumerator.config.max_points:
                raise ResourceLimitError(f"more than {enumerator.config.max_points} points")
            yield PointRecord(tuple(row), max(abs(x) for x in row) ** m)


def counting_series(
    model: VarietyModel,
    T_list: Sequence[int],
    config: Optional[EnumerationConfig] = None,
    strategy: str = "auto",
) -> CountTable:
    """N(U, L, T) for each T, from a single enumeration at the largest T."""
    heights = [_check_height(T) for T in T_list]
    if any(b <= a for a, b in zip(heights, heights[1:])):
        raise DomainError("T values must be strictly ascending")
    if not heights:
        return CountTable()
    top = collect_points(model, heights[-1], config, strategy)
    bound = shell_bound(model, heights[-1])
    per_shell = np.bincount(top.shells, minlength=bound + 1) if len(top) else np.zeros(
        bound + 1, dtype=np.int64
    )
    cumulative = np.cumsum(per_shell)
    return CountTable.from_pairs(
        (T, int(cumulative[shell_bound(model, T)])) for T in heights
    )


def geometric_steps(tmax: int, steps: int) -> List[int]:
    """About ``steps`` geometrically spaced integers from 1 to tmax, ascending, deduplicated."""
    tmax = _check_height(tmax)
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    if steps == 1 or tmax == 1:
        return [tmax]
    values = {int(round(tmax ** (k / (steps - 1)))) for k in range(steps)}
    values.add(tmax)
    return sorted(v for v in values if 1 <= v <= tmax)
