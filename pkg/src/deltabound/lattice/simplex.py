"""Exact two-phase simplex over the rationals."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from deltabound.core.errors import DomainError


class LPStatus(str, Enum):
    """Resolution of a linear program."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    """Outcome of a solve; ``x`` and ``value`` are set only when optimal."""

    status: LPStatus
    x: Optional[List[Fraction]] = None
    value: Optional[Fraction] = None


class RationalSimplex:
    """Minimize c·x subject to A x = b, x ≥ 0, with Bland's pivoting rule.

    All arithmetic is on Fractions, so the optimum and the primal point are exact.
    """

    def __init__(
        self,
        a: Sequence[Sequence[object]],
        b: Sequence[object],
        c: Sequence[object],
    ):
        if len(a) != len(b):
            raise DomainError("constraint matrix and right-hand side differ in length")
        self.n = len(c)
        for row in a:
            if len(row) != self.n:
                raise DomainError("constraint row length differs from objective length")
        self.a = [[Fraction(v) for v in row] for row in a]
        self.b = [Fraction(v) for v in b]
        self.c = [Fraction(v) for v in c]

    def _pivot(self, rows: List[List[Fraction]], rhs: List[Fraction], i: int, j: int) -> None:
        p = rows[i][j]
        rows[i] = [v / p for v in rows[i]]
        rhs[i] = rhs[i] / p
        for k in range(len(rows)):
            if k == i:
                continue
            f = rows[k][j]
            if f:
                pivot_row = rows[i]
                rows[k] = [v - f * w for v, w in zip(rows[k], pivot_row)]
                rhs[k] -= f * rhs[i]

    def _optimize(
        self,
        rows: List[List[Fraction]],
        rhs: List[Fraction],
        basis: List[int],
        costs: List[Fraction],
        columns: int,
    ) -> LPStatus:
        while True:
            reduced = None
            entering = -1
            for j in range(columns):
                z = costs[j] - sum(
                    (costs[basis[i]] * rows[i][j] for i in range(len(rows)) if rows[i][j]),
                    Fraction(0),
                )
                if z < 0:
                    entering, reduced = j, z
                    break
            if reduced is None:
                return LPStatus.OPTIMAL

            leaving = -1
            best: Optional[Fraction] = None
            for i, row in enumerate(rows):
                if row[entering] > 0:
                    ratio = rhs[i] / row[entering]
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and basis[i] < basis[leaving])
                    ):
                        best, leaving = ratio, i
            if leaving < 0:
                return LPStatus.UNBOUNDED
            self._pivot(rows, rhs, leaving, entering)
            basis[leaving] = entering

    def solve(self) -> LPResult:
        m, n = len(self.a), self.n
        rows: List[List[Fraction]] = []
        rhs: List[Fraction] = []
        for i in range(m):
            sign = -1 if self.b[i] < 0 else 1
            artificial = [Fraction(int(k == i)) for k in range(m)]
            rows.append([sign * v for v in self.a[i]] + artificial)
            rhs.append(sign * self.b[i])
        basis = [n + i for i in range(m)]

        # phase I
        costs = [Fraction(0)] * n + [Fraction(1)] * m
        self._optimize(rows, rhs, basis, costs, n + m)
        if sum((rhs[i] for i in range(m) if basis[i] >= n), Fraction(0)) > 0:
            return LPResult(LPStatus.INFEASIBLE)

        keep: List[int] = []
        for i in range(m):
            if basis[i] >= n:
                column = next((j for j in range(n) if rows[i][j] != 0), None)
                if column is None:
                    continue  # redundant constraint
                self._pivot(rows, rhs, i, column)
                basis[i] = column
            keep.append(i)
        rows = [rows[i][:n] for i in keep]
        rhs = [rhs[i] for i in keep]
        basis = [basis[i] for i in keep]

        # phase II
        status = self._optimize(rows, rhs, basis, list(self.c), n)
        if status == LPStatus.UNBOUNDED:
            return LPResult(LPStatus.UNBOUNDED)
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            x[j] = rhs[i]
        value = sum((cj * xj for cj, xj in zip(self.c, x)), Fraction(0))
        return LPResult(LPStatus.OPTIMAL, x=x, value=value)

    def feasible_point(self) -> Optional[List[Fraction]]:
        """Any x ≥ 0 with A x = b, or None."""
        result = RationalSimplex(self.a, self.b, [0] * self.n).solve()
        return result.x if result.status == LPStatus.OPTIMAL else None
