"""Exact rational numbers and dense univariate polynomials.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  :class:`Poly` is an immutable dense coefficient
vector, ``coeffs[i]`` being the coefficient of ``k**i``.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rat(text: str) -> Fraction:
    """Parse ``"num/den"`` or an integer string.  Decimal literals are rejected."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    m = _RAT_RE.match(str(text))
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rat(q: RatLike) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@functools.total_ordering
class _NegDegree:
    """Degree of the zero polynomial: compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("NEG-degree")


NEG = _NegDegree()


class Poly:
    """Dense univariate polynomial over Q.  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors

    @classmethod
    def constant(cls, c: RatLike) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: RatLike = 1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def linear(cls, s: RatLike, c: RatLike) -> "Poly":
        """The polynomial ``s*k + c``."""
        return cls([c, s])

    # basic queries

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def support(self) -> set[int]:
        return {i for i, c in enumerate(self.coeffs) if c != 0}

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self!r}")
        return [c.numerator for c in self.coeffs]

    def __call__(self, k: RatLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"Poly({[format_rat(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "k" if i == 1 else f"k^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    # serialization

    def to_json(self) -> list[str]:
        return [format_rat(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(parse_rat(c) for c in data)


ZERO = Poly()
ONE = Poly([1])
K = Poly([0, 1])


def shift(p: Poly, c: RatLike) -> Poly:
    """Return ``q`` with ``q(k) = p(k + c)`` (Horner-style Taylor shift)."""
    return compose_linear(p, 1, c)


def compose_linear(p: Poly, s: RatLike, c: RatLike) -> Poly:
    """Return ``q`` with ``q(k) = p(s*k + c)``."""
    lin = Poly([c, s])
    acc = Poly()
    for coef in reversed(p.coeffs):
        acc = acc * lin + coef
    return acc


@dataclass(frozen=True)
class PowerBasisPoly:
    """Coefficients in the basis ``(k + gamma)**i``."""

    gamma: Fraction
    coeffs: tuple

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "coeffs", tuple(cs))

    def to_json(self) -> dict:
        return {"gamma": format_rat(self.gamma), "coeffs": [format_rat(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "PowerBasisPoly":
        return cls(parse_rat(data["gamma"]), tuple(parse_rat(c) for c in data["coeffs"]))


def to_power_basis(p: Poly, gamma: RatLike) -> PowerBasisPoly:
    # p(k) = q(k + gamma)  <=>  q(y) = p(y - gamma)
    return PowerBasisPoly(Fraction(gamma), shift(p, -Fraction(gamma)).coeffs)


def from_power_basis(q: PowerBasisPoly) -> Poly:
    return shift(Poly(q.coeffs), q.gamma)


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"
    ZERO = "zero"


def parity(q: Union[PowerBasisPoly, Poly]) -> Parity:
    """Parity of the exponents actually used by ``q``."""
    cs = q.coeffs
    if not cs:
        return Parity.ZERO
    odd = any(c != 0 for c in cs[1::2])
    even = any(c != 0 for c in cs[0::2])
    if odd and even:
        return Parity.MIXED
    return Parity.ODD if odd else Parity.EVEN
