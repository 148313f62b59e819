"""Exact intersection theory on Néron-Severi lattices."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import structlog

from deltabound.core.errors import DomainError

logger = structlog.get_logger(__name__)

Number = Union[int, Fraction]


def _coords(values: Iterable[Number]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class _LatticeVector:
    """Exact coordinate vector in a lattice basis."""

    coords: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _coords(self.coords))

    @classmethod
    def of(cls, *values: Number):
        return cls(_coords(values))

    @classmethod
    def zero(cls, rank: int):
        return cls((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other: "_LatticeVector") -> None:
        if type(other) is not type(self):
            raise DomainError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.rank != self.rank:
            raise DomainError(f"dimension mismatch: {self.rank} != {other.rank}")

    def __add__(self, other):
        self._check(other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def __mul__(self, scalar: Number):
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        return type(self)(tuple(a * scalar for a in self.coords))

    __rmul__ = __mul__

    def __lt__(self, other) -> bool:
        return self.coords < other.coords


@dataclass(frozen=True)
class DivisorClass(_LatticeVector):
    """A divisor class with exact rational coordinates."""


@dataclass(frozen=True)
class CurveClass(_LatticeVector):
    """A 1-cycle class, paired with divisors through the gram matrix."""


@dataclass(frozen=True)
class IntersectionLattice:
    """A Néron-Severi lattice with its intersection pairing.

    For surfaces divisors and curves share one basis. Threefold lattices pair
    N¹ against the dual curve basis, so their gram is the identity and
    ``dimension`` is 3.
    """

    basis_labels: Tuple[str, ...]
    gram: Tuple[Tuple[int, ...], ...]
    canonical_class: DivisorClass
    dimension: int = 2
    name: str = ""
    del_pezzo_blowups: Optional[int] = None
    explicit_generators: Tuple[DivisorClass, ...] = field(default=())

    def __post_init__(self) -> None:
        n = len(self.basis_labels)
        if n == 0:
            raise DomainError("lattice rank must be positive")
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise DomainError("gram matrix must be rank x rank")
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError(f"gram matrix not symmetric at ({i}, {j})")
        if self.canonical_class.rank != n:
            raise DomainError("canonical class has the wrong rank")

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @property
    def anticanonical(self) -> DivisorClass:
        return -self.canonical_class

    def divisor(self, *values: Number) -> DivisorClass:
        d = DivisorClass.of(*values)
        self.check(d)
        return d

    def curve(self, *values: Number) -> CurveClass:
        c = CurveClass.of(*values)
        self.check(c)
        return c

    def basis_divisor(self, label: str) -> DivisorClass:
        """The basis vector named ``label``."""
        try:
            i = self.basis_labels.index(label)
        except ValueError:
            raise DomainError(f"unknown basis label {label!r}") from None
        return DivisorClass(tuple(Fraction(int(j == i)) for j in range(self.rank)))

    def check(self, v: _LatticeVector) -> None:
        if v.rank != self.rank:
            raise DomainError(f"dimension mismatch: class of rank {v.rank} in rank-{self.rank} lattice")


def make_lattice(
    labels: Sequence[str],
    gram: Sequence[Sequence[int]],
    canonical: Sequence[Number],
    dimension: int = 2,
    name: str = "",
    generators: Sequence[Sequence[Number]] = (),
) -> IntersectionLattice:
    """Build an arbitrary lattice from plain sequences."""
    return IntersectionLattice(
        basis_labels=tuple(labels),
        gram=tuple(tuple(int(x) for x in row) for row in gram),
        canonical_class=DivisorClass.of(*canonical),
        dimension=dimension,
        name=name,
        explicit_generators=tuple(DivisorClass.of(*g) for g in generators),
    )


@lru_cache(maxsize=None)
def make_del_pezzo_lattice(r: int) -> IntersectionLattice:
    """Lattice of ℙ² blown up in r general points: basis H, E1..Er."""
    if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r <= 8:
        raise DomainError(f"del Pezzo lattice needs 0 <= r <= 8, got {r!r}")
    n = r + 1
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n)
    )
    return IntersectionLattice(
        basis_labels=("H",) + tuple(f"E{i}" for i in range(1, r + 1)),
        gram=gram,
        canonical_class=DivisorClass.of(-3, *([1] * r)),
        dimension=2,
        name=f"dP{9 - r}",
        del_pezzo_blowups=r,
    )


def parse_lattice_spec(spec: str) -> IntersectionLattice:
    """Parse "delpezzo:<degree>" (1..9) or "blowup:<r>" (0..8)."""
    kind, _, value = spec.partition(":")
    try:
        number = int(value)
    except ValueError:
        raise DomainError(f"bad lattice spec {spec!r}; use delpezzo:<degree> or blowup:<r>") from None
    kind = kind.strip().lower()
    if kind == "delpezzo":
        if not 1 <= number <= 9:
            raise DomainError(f"del Pezzo degree must be in 1..9, got {number}")
        return make_del_pezzo_lattice(9 - number)
    if kind == "blowup":
        return make_del_pezzo_lattice(number)
    raise DomainError(f"bad lattice spec {spec!r}; use delpezzo:<degree> or blowup:<r>")


def intersect(
    lat: IntersectionLattice,
    a: Union[DivisorClass, CurveClass],
    b: Union[DivisorClass, CurveClass],
) -> Fraction:
    """aᵀ · gram · b."""
    lat.check(a)
    lat.check(b)
    total = Fraction(0)
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        row = lat.gram[i]
        for j, bj in enumerate(b.coords):
            if row[j] and bj:
                total += ai * row[j] * bj
    return total


def as_curve(d: DivisorClass) -> CurveClass:
    """Reinterpret a divisor on a surface as a curve class."""
    return CurveClass(d.coords)


def as_divisor(c: CurveClass) -> DivisorClass:
    return DivisorClass(c.coords)


def _require_del_pezzo(lat: IntersectionLattice) -> int:
    if lat.del_pezzo_blowups is None:
        raise DomainError(f"lattice {lat.name or lat.basis_labels} is not a del Pezzo lattice")
    return lat.del_pezzo_blowups


def _sign_vectors(length: int, total: int, squares: int) -> Iterable[Tuple[int, ...]]:
    """Integer vectors b with Σb = total and Σb² = squares, lexicographic order."""
    if length == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if squares < 0 or total * total > length * squares:
        return
    bound = isqrt(squares)
    for b in range(-bound, bound + 1):
        for rest in _sign_vectors(length - 1, total - b, squares - b * b):
            yield (b,) + rest


@lru_cache(maxsize=None)
def _negative_curves(lat: IntersectionLattice) -> Tuple[DivisorClass, ...]:
    r = _require_del_pezzo(lat)
    if r == 0:
        return ()
    found: List[DivisorClass] = []
    # D = aH - Σ bᵢEᵢ with a² - Σbᵢ² = -1 and 3a - Σbᵢ = 1
    for a in range(-(3 + r), 3 + r + 1):
        squares = a * a + 1
        total = 3 * a - 1
        for bs in _sign_vectors(r, total, squares):
            found.append(DivisorClass.of(a, *(-b for b in bs)))
    found.sort()
    logger.debug("lattice.negative_curves", r=r, count=len(found))
    return tuple(found)


def negative_curves(lat: IntersectionLattice) -> List[DivisorClass]:
    """All classes D with D·D = -1 and D·(-K) = 1, sorted lexicographically."""
    return list(_negative_curves(lat))


@lru_cache(maxsize=None)
def _effective_generators(lat: IntersectionLattice) -> Tuple[DivisorClass, ...]:
    if lat.explicit_generators:
        return tuple(sorted(set(lat.explicit_generators)))
    r = _require_del_pezzo(lat)
    if r == 0:
        return (lat.divisor(1),)
    gens = set(_negative_curves(lat))
    if r == 1:
        gens.add(lat.divisor(1, -1))
    elif r == 2:
        gens.add(lat.divisor(1, -1, -1))
    return tuple(sorted(gens))


def effective_generators(lat: IntersectionLattice) -> List[DivisorClass]:
    """Generators of the effective cone; cached per lattice."""
    return list(_effective_generators(lat))


def is_nef(lat: IntersectionLattice, D: DivisorClass) -> bool:
    """D pairs nonnegatively with every effective generator; surfaces only."""
    if lat.dimension != 2:
        raise DomainError(f"is_nef needs a surface lattice, {lat.name} has dimension {lat.dimension}")
    return all(intersect(lat, D, as_curve(C)) >= 0 for C in effective_generators(lat))


def format_class(lat: IntersectionLattice, v: _LatticeVector) -> str:
    """Render a class as e.g. "3H - E1 - 2E5"."""
    lat.check(v)
    parts: List[str] = []
    for label, c in zip(lat.basis_labels, v.coords):
        if c == 0:
            continue
        mag = abs(c)
        text = label if mag == 1 else f"{mag}{label}" if mag.denominator == 1 else f"({mag}){label}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts) if parts else "0"
