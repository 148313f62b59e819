"""Pell and generalized Pell equation solvers."""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Optional, Tuple

import numpy as np
import structlog
from sympy.solvers.diophantine.diophantine import diop_DN

from deltabound.core.errors import DomainError
from deltabound.core.intmath import fits_int64, is_square, isqrt_array, square_residues

logger = structlog.get_logger(__name__)

SIEVE_MODULI = (16, 9, 5, 7)


@dataclass(frozen=True)
class PellSolution:
    """A positive solution (x, y)."""

    x: int
    y: int

    def residue(self, D: int) -> int:
        """x² - D·y²."""
        return self.x * self.x - D * self.y * self.y


@lru_cache(maxsize=4096)
def sqrt_expansion(D: int) -> Tuple[int, Tuple[int, ...]]:
    """(a0, period) of the continued fraction of √D for nonsquare D ≥ 2.

    Integer recurrence m ← d·a - m, d ← (D - m²)/d, a ← ⌊(a0 + m)/d⌋; the period
    ends at the first a = 2·a0.
    """
    if D < 2 or is_square(D):
        raise DomainError(f"sqrt_expansion needs a nonsquare integer D >= 2, got {D!r}")
    a0 = isqrt(D)
    m, den, a = 0, 1, a0
    period: List[int] = []
    while a != 2 * a0:
        m = den * a - m
        den = (D - m * m) // den
        a = (a0 + m) // den
        period.append(a)
    return a0, tuple(period)


def convergents(D: int, terms: int) -> List[Tuple[int, int]]:
    """The first ``terms`` convergents p/q of √D."""
    a0, period = sqrt_expansion(D)
    partials = [a0] + [period[i % len(period)] for i in range(terms - 1)]
    p_prev, p = 1, partials[0]
    q_prev, q = 0, 1
    out = [(p, q)]
    for a in partials[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return out


@lru_cache(maxsize=4096)
def pell_fundamental(D: int) -> PellSolution:
    """Minimal positive solution of x² - D·y² = 1 from the continued fraction of √D."""
    if isinstance(D, bool) or not isinstance(D, int) or D < 2 or is_square(D):
        raise DomainError(f"pell_fundamental needs a nonsquare integer D >= 2, got {D!r}")
    period = len(sqrt_expansion(D)[1])
    p, q = convergents(D, period)[-1]
    # the convergent ending the first period solves p² - Dq² = ±1
    norm = p * p - D * q * q
    if norm not in (1, -1):
        raise ArithmeticError(f"continued fraction of sqrt({D}) inconsistent: norm {norm}")
    if norm == -1:
        p, q = p * p + D * q * q, 2 * p * q
    logger.debug("pell.fundamental", D=D, period=period, x=p, y=q)
    return PellSolution(p, q)


def _orbit_first_even(x: int, y: int, D: int, unit: PellSolution) -> Optional[PellSolution]:
    """First positive element with even y in the forward unit orbit of (x, y)."""
    seen = set()
    for _ in range(64):
        if x > 0 and y > 0:
            if y % 2 == 0:
                return PellSolution(x, y)
            state = (x % 2, y % 2)
            if state in seen:
                return None
            seen.add(state)
        x, y = x * unit.x + D * y * unit.y, x * unit.y + y * unit.x
    return None


def _sieve_even_y(D: int, N: int, bound: int) -> Optional[PellSolution]:
    """Brute force over even 0 < y ≤ bound for x² - D·y² = N, quadratic-residue sieved."""
    if bound < 2:
        return None
    admissible = {}
    for m in SIEVE_MODULI:
        squares = square_residues(m)
        residues = [
            r for r in range(m) if (m % 2 or r % 2 == 0) and (N + D * r * r) % m in squares
        ]
        if not residues:
            logger.debug("pell.sieve_empty", D=D, N=N, modulus=m)
            return None
        admissible[m] = residues

    ys = np.arange(2, bound + 1, 2, dtype=np.int64)
    for m, residues in admissible.items():
        ys = ys[np.isin(ys % m, residues)]
    if ys.size == 0:
        return None
    if fits_int64(abs(N) + D * bound * bound):
        values = N + D * ys * ys
        nonnegative = values >= 0
        ys, values = ys[nonnegative], values[nonnegative]
        roots = isqrt_array(values)
        hits = np.nonzero(roots * roots == values)[0]
        if hits.size:
            y = int(ys[hits[0]])
            return PellSolution(isqrt(N + D * y * y), y)
        return None
    for y in ys.tolist():
        value = N + D * y * y
        if is_square(value):
            return PellSolution(isqrt(value), y)
    return None


def pell_general_min_even(d: int, fallback_bound: int = 10**6) -> Optional[PellSolution]:
    """Minimal-x solution of X² - 4d·Y² = 5 with Y > 0 even, or None."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise DomainError(f"pell_general_min_even needs d >= 1, got {d!r}")
    D, N = 4 * d, 5
    candidates: List[PellSolution] = []

    if is_square(D):
        root = isqrt(D)
        # (x - root·y)(x + root·y) = 5
        for low in range(1, N + 1):
            if N % low:
                continue
            high = N // low
            if high < low or (low + high) % 2 or (high - low) % (2 * root):
                continue
            x, y = (low + high) // 2, (high - low) // (2 * root)
            if y > 0 and y % 2 == 0:
                candidates.append(PellSolution(x, y))
    else:
        unit = pell_fundamental(D)
        for x0, y0 in diop_DN(D, N):
            x0, y0 = abs(int(x0)), abs(int(y0))
            for sy in (y0, -y0):
                hit = _orbit_first_even(x0, sy, D, unit)
                if hit is not None:
                    candidates.append(hit)
        fallback = _sieve_even_y(D, N, fallback_bound)
        if fallback is not None:
            candidates.append(fallback)

    for c in candidates:
        if c.residue(D) != N:
            raise ArithmeticError(f"generalized Pell candidate {c} fails x^2 - {D}y^2 = {N}")
    best = min(candidates, key=lambda s: (s.x, s.y)) if candidates else None
    logger.debug("pell.general_min_even", d=d, found=best is not None)
    return best
