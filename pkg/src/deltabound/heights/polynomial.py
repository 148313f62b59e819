"""Integer polynomials in x0..xn: parsing, homogeneity and vectorized evaluation."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from deltabound.core.errors import ParseError
from deltabound.core.intmath import fits_int64

Exponents = Tuple[int, ...]

_MINUS_SIGNS = ("-", "−")


def _is_digit(ch: str) -> bool:
    return len(ch) == 1 and "0" <= ch <= "9"


@dataclass(frozen=True)
class Polynomial:
    """Sparse integer polynomial, ``terms`` maps exponent vectors to nonzero coefficients."""

    nvars: int
    terms: Dict[Exponents, int] = field(default_factory=dict)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            total = terms.get(e, 0) + c
            if total:
                terms[e] = total
            else:
                terms.pop(e, None)
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        terms: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(e, 0) + c1 * c2
                if total:
                    terms[e] = total
                else:
                    terms.pop(e, None)
        return Polynomial(self.nvars, terms)

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self.terms), default=0)

    def coefficients_in(self, index: int) -> Dict[int, "Polynomial"]:
        """Write self = Σ_k c_k · x_index^k with c_k free of x_index."""
        out: Dict[int, Dict[Exponents, int]] = {}
        for e, c in self.terms.items():
            k = e[index]
            rest = e[:index] + (0,) + e[index + 1 :]
            out.setdefault(k, {})[rest] = c
        return {k: Polynomial(self.nvars, terms) for k, terms in out.items()}

    def magnitude(self, bound: int) -> int:
        """Upper bound for |self(x)| over max|x_i| ≤ bound."""
        return sum(abs(c) * bound ** sum(e) for e, c in self.terms.items())

    def evaluate(self, points: np.ndarray, bound: int) -> np.ndarray:
        """Evaluate on the rows of ``points``; exact, switching to Python ints past int64."""
        rows = points.shape[0]
        if not self.terms:
            return np.zeros(rows, dtype=np.int64)
        if not fits_int64(self.magnitude(bound)):
            points = points.astype(object)
        total = None
        for e, c in self.terms.items():
            term = np.full(rows, c, dtype=points.dtype)
            for i, k in enumerate(e):
                if k:
                    term = term * points[:, i] ** k
            total = term if total is None else total + term
        return total

    def __call__(self, coords: Tuple[int, ...]) -> int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(coords, e):
                term *= x**k
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: List[str] = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = [f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
            body = "*".join(factors)
            magnitude = abs(c)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if parts:
                parts.append(f"{'-' if c < 0 else '+'} {text}")
            else:
                parts.append(text if c > 0 else f"-{text}")
        return " ".join(parts)


class _Parser:
    """Recursive descent over: expr := term (± term)*, term := unary (* unary)*,
    unary := ± unary | power, power := atom (^ int)?, atom := int | x<k> | ( expr )."""

    def __init__(self, text: str, nvars: Optional[int]):
        self.text = text
        self.pos = 0
        self.nvars = nvars
        self.max_index = -1
        self._size = nvars if nvars is not None else self._scan_width()

    def _scan_width(self) -> int:
        width, i = 0, 0
        while i < len(self.text):
            if self.text[i] == "x":
                j = i + 1
                while j < len(self.text) and _is_digit(self.text[j]):
                    j += 1
                if j > i + 1:
                    width = max(width, int(self.text[i + 1 : j]) + 1)
                i = j
            else:
                i += 1
        return width

    def error(self, message: str) -> ParseError:
        return ParseError(message, line=1, column=self.pos + 1)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        if not self.text.strip():
            raise self.error("empty polynomial")
        poly = self.expr()
        if self.peek():
            raise self.error(f"unexpected character {self.peek()!r}")
        return poly

    def expr(self) -> Polynomial:
        poly = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                poly = poly + self.term()
            elif ch in _MINUS_SIGNS:
                self.pos += 1
                poly = poly - self.term()
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.unary()
        while self.peek() == "*":
            self.pos += 1
            poly = poly * self.unary()
        return poly

    def unary(self) -> Polynomial:
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            return self.unary()
        if ch in _MINUS_SIGNS:
            self.pos += 1
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            if not _is_digit(self.peek()):
                raise self.error("exponent must be a nonnegative integer literal")
            return base ** self.integer()
        return base

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and _is_digit(self.text[self.pos]):
            self.pos += 1
        return int(self.text[start : self.pos])

    def atom(self) -> Polynomial:
        ch = self.peek()
        if _is_digit(ch):
            return Polynomial.constant(self._size, self.integer())
        if ch == "x":
            start = self.pos
            self.pos += 1
            if not (self.pos < len(self.text) and _is_digit(self.text[self.pos])):
                self.pos = start
                raise self.error("variable name must be x<index>")
            index = self.integer()
            if self.nvars is not None and index >= self.nvars:
                self.pos = start
                raise self.error(f"unknown variable x{index} (ambient has x0..x{self.nvars - 1})")
            self.max_index = max(self.max_index, index)
            return Polynomial.variable(self._size, index)
        if ch == "(":
            self.pos += 1
            poly = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return poly
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {ch!r}")


def parse_polynomial(text: str, nvars: Optional[int] = None) -> Polynomial:
    """Parse ``text`` into a polynomial in x0..x{nvars-1}.

    Raises:
        ParseError: on syntax errors or variables outside the ambient space; the
            column is 1-based within ``text``.
    """
    return _Parser(text, nvars).parse()
