"""Integer helpers shared by the Pell solvers and the enumerators."""

from math import isqrt

import numpy as np

INT64_SAFE = 1 << 62


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n ≥ 0, exactly."""
    if n < 0 or k < 1:
        raise ValueError("integer_root needs n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    x = int(round(n ** (1.0 / k)))
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def fits_int64(magnitude: int) -> bool:
    """Values up to ``magnitude`` in absolute value stay clear of int64 overflow."""
    return magnitude < INT64_SAFE


def isqrt_array(values: np.ndarray) -> np.ndarray:
    """Elementwise floor square root of a nonnegative int64 array below 2**62."""
    roots = np.floor(np.sqrt(values.astype(np.float64))).astype(np.int64)
    for _ in range(2):
        roots = np.where(roots * roots > values, roots - 1, roots)
        roots = np.where((roots + 1) * (roots + 1) <= values, roots + 1, roots)
    return roots


def square_residues(modulus: int) -> frozenset:
    return frozenset((r * r) % modulus for r in range(modulus))
