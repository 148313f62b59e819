"""Point enumerators over leading-coordinate shards."""

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple, Type

import numpy as np
import structlog

from deltabound.config.settings import EnumerationConfig
from deltabound.core.errors import DomainError, ResourceLimitError
from deltabound.core.intmath import fits_int64, isqrt_array
from deltabound.heights.model import CompiledVariety
from deltabound.heights.polynomial import Polynomial

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Shard:
    """All points with x0 = lead and max|x_i| ≤ bound."""

    lead: int
    bound: int


class PointEnumerator(ABC):
    """Enumerates primitive sign-normalized points of a variety, one shard at a time.

    Every shard result is an int64 array of coordinate rows in lexicographic order,
    so concatenating shards in ascending ``lead`` gives a lexicographic stream.
    """

    name: str = "abstract"

    def __init__(self, variety: CompiledVariety, config: Optional[EnumerationConfig] = None):
        self.variety = variety
        self.config = config or EnumerationConfig()

    @property
    def nvars(self) -> int:
        return self.variety.nvars

    @abstractmethod
    def candidate_cells(self, bound: int) -> int:
        """Grid cells scanned for every shard up to ``bound``."""

    @abstractmethod
    def scan_shard(self, shard: Shard) -> np.ndarray:
        """Points of ``shard`` as an (k, nvars) int64 array."""

    def shards(self, bound: int) -> Tuple[Shard, ...]:
        return tuple(Shard(lead, bound) for lead in range(bound + 1))

    def check_budget(self, bound: int) -> None:
        cells = self.candidate_cells(bound)
        if cells > self.config.max_candidates:
            raise ResourceLimitError(
                f"enumeration up to max|x_i| = {bound} needs {cells} candidate cells, "
                f"above the cap of {self.config.max_candidates}"
            )

    def _empty(self) -> np.ndarray:
        return np.empty((0, self.nvars), dtype=np.int64)

    def _split(self, free: int, bound: int) -> Tuple[int, np.ndarray]:
        """(outer, inner grid): the last coordinates are vectorized within block_size."""
        width = 2 * bound + 1
        inner = free
        while inner > 1 and width**inner > self.config.block_size:
            inner -= 1
        grid = np.indices((width,) * inner, dtype=np.int64).reshape(inner, -1).T - bound
        return free - inner, grid

    def _blocks(self, lead: int, bound: int, free: int) -> Iterator[np.ndarray]:
        """Rows (lead, x_1..x_free, 0...) over [-bound, bound]^free in lexicographic order."""
        if free == 0:
            block = np.zeros((1, self.nvars), dtype=np.int64)
            block[:, 0] = lead
            yield block
            return
        outer, grid = self._split(free, bound)
        for prefix in itertools.product(range(-bound, bound + 1), repeat=outer):
            block = np.zeros((grid.shape[0], self.nvars), dtype=np.int64)
            block[:, 0] = lead
            if outer:
                block[:, 1 : 1 + outer] = prefix
            block[:, 1 + outer : 1 + free] = grid
            yield block

    def keep(self, points: np.ndarray, bound: int) -> np.ndarray:
        """Rows that are nonzero, sign-normalized, primitive, within the bound, on X and in U."""
        if points.shape[0] == 0:
            return points
        nonzero = points != 0
        first = nonzero.argmax(axis=1)
        mask = nonzero.any(axis=1)
        mask &= points[np.arange(points.shape[0]), first] > 0
        mask &= np.abs(points).max(axis=1) <= bound
        points = points[mask]
        if points.shape[0] == 0:
            return points
        points = points[np.gcd.reduce(np.abs(points), axis=1) == 1]
        for equation in self.variety.equations:
            if points.shape[0] == 0:
                return points
            points = points[(equation.evaluate(points, bound) == 0).astype(bool)]
        if self.variety.exclusions and points.shape[0]:
            inside = np.zeros(points.shape[0], dtype=bool)
            for exclusion in self.variety.exclusions:
                inside |= (exclusion.evaluate(points, bound) != 0).astype(bool)
            points = points[inside]
        return points


class ShellEnumerator(PointEnumerator):
    """Scans the full cube [-B, B]^n behind each leading coordinate, vectorized in blocks."""

    name = "shell"

    def candidate_cells(self, bound: int) -> int:
        return (bound + 1) * (2 * bound + 1) ** (self.nvars - 1)

    def scan_shard(self, shard: Shard) -> np.ndarray:
        found = [
            self.keep(block, shard.bound)
            for block in self._blocks(shard.lead, shard.bound, self.nvars - 1)
        ]
        found = [f for f in found if f.shape[0]]
        return np.concatenate(found) if found else self._empty()


class _SieveOverflow(Exception):
    pass


class SieveEnumerator(PointEnumerator):
    """Solves one equation of degree 1 or 2 in the last coordinate for x_n.

    The remaining coordinates are scanned as in the shell enumerator; x_n comes from
    a divisibility test (linear case) or an exact square-root test of the
    discriminant (quadratic case).
    """

    name = "sieve"

    def __init__(self, variety: CompiledVariety, config: Optional[EnumerationConfig] = None):
        super().__init__(variety, config)
        self.equation = self.solvable_equation(variety)
        if self.equation is None:
            raise DomainError("no equation has degree 1 or 2 in the last coordinate")
        coefficients = self.equation.coefficients_in(self.nvars - 1)
        zero = Polynomial(self.nvars)
        self.quadratic = coefficients.get(2, zero)
        self.linear = coefficients.get(1, zero)
        self.constant = coefficients.get(0, zero)
        self._fallback = ShellEnumerator(variety, config)

    @staticmethod
    def solvable_equation(variety: CompiledVariety) -> Optional[Polynomial]:
        if variety.nvars < 2:
            return None
        last = variety.nvars - 1
        for equation in variety.equations:
            if equation.degree_in(last) in (1, 2):
                return equation
        return None

    def candidate_cells(self, bound: int) -> int:
        return (bound + 1) * (2 * bound + 1) ** (self.nvars - 2)

    def _coefficients(self, base: np.ndarray, bound: int) -> Tuple[np.ndarray, ...]:
        sizes = [p.magnitude(bound) for p in (self.quadratic, self.linear, self.constant)]
        if not all(fits_int64(s) for s in sizes) or not fits_int64(
            sizes[1] ** 2 + 4 * sizes[0] * sizes[2] + 2 * bound * max(sizes[0], 1)
        ):
            raise _SieveOverflow
        return tuple(
            p.evaluate(base, bound).astype(np.int64)
            for p in (self.quadratic, self.linear, self.constant)
        )

    def _solve(self, base: np.ndarray, bound: int) -> np.ndarray:
        a, b, c = self._coefficients(base, bound)
        rows, xs = [], []

        quadratic = np.nonzero(a != 0)[0]
        if quadratic.size:
            disc = b[quadratic] ** 2 - 4 * a[quadratic] * c[quadratic]
            real = disc >= 0
            idx, disc = quadratic[real], disc[real]
            root = isqrt_array(disc)
            square = root * root == disc
            idx, root = idx[square], root[square]
            for sign in (-1, 1):
                num = -b[idx] + sign * root
                den = 2 * a[idx]
                exact = num % den == 0
                rows.append(idx[exact])
                xs.append(num[exact] // den[exact])

        linear = np.nonzero((a == 0) & (b != 0))[0]
        if linear.size:
            exact = (-c[linear]) % b[linear] == 0
            rows.append(linear[exact])
            xs.append((-c[linear][exact]) // b[linear][exact])

        free = np.nonzero((a == 0) & (b == 0) & (c == 0))[0]
        if free.size:
            values = np.arange(-bound, bound + 1, dtype=np.int64)
            rows.append(np.repeat(free, values.size))
            xs.append(np.tile(values, free.size))

        if not rows:
            return self._empty()
        rows_all = np.concatenate(rows)
        candidates = base[rows_all].copy()
        candidates[:, -1] = np.concatenate(xs)
        candidates = candidates[np.abs(candidates[:, -1]) <= bound]
        if candidates.shape[0] == 0:
            return candidates
        return np.unique(candidates, axis=0)

    def scan_shard(self, shard: Shard) -> np.ndarray:
        try:
            found = [
                self.keep(self._solve(block, shard.bound), shard.bound)
                for block in self._blocks(shard.lead, shard.bound, self.nvars - 2)
            ]
        except _SieveOverflow:
            logger.debug("enumerate.sieve_overflow", lead=shard.lead, bound=shard.bound)
            return self._fallback.scan_shard(shard)
        found = [f for f in found if f.shape[0]]
        return np.concatenate(found) if found else self._empty()


ENUMERATORS: Dict[str, Type[PointEnumerator]] = {
    ShellEnumerator.name: ShellEnumerator,
    SieveEnumerator.name: SieveEnumerator,
}


def select_enumerator(
    variety: CompiledVariety,
    config: Optional[EnumerationConfig] = None,
    strategy: str = "auto",
) -> PointEnumerator:
    """The sieve when some equation is linear or quadratic in the last coordinate, else shells."""
    if strategy == "auto":
        strategy = "sieve" if SieveEnumerator.solvable_equation(variety) is not None else "shell"
    if strategy not in ENUMERATORS:
        raise DomainError(f"unknown enumeration strategy {strategy!r}")
    return ENUMERATORS[strategy](variety, config)


def shells(points: np.ndarray) -> np.ndarray:
    """max|x_i| per row."""
    if points.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    return np.abs(points).max(axis=1)
