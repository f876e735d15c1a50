"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .exactnum import as_fraction

KARATSUBA_CUTOFF = 64


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return out


def _sub_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return out


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of integer coefficient lists (ascending powers)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        return _schoolbook(a, b)
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = mul_int(a0, b0)
    z2 = mul_int(a1, b1)
    z1 = _sub_int(_sub_int(mul_int(_add_int(a0, a1), _add_int(b0, b1)), z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[i + h] += v
    for i, v in enumerate(z2):
        out[i + 2 * h] += v
    return out


def horner_int(coeffs: Sequence[int], u: int, v: int) -> int:
    """``v**d * f(u/v)`` for ``f`` of degree ``d`` -- same sign as ``f(u/v)`` when v > 0."""
    acc = 0
    vp = 1
    for c in reversed(coeffs):
        acc = acc * u + c * vp
        vp *= v
    return acc


class RatPoly:
    """Immutable polynomial ``sum coeffs[i] * x**i`` over the rationals.

    Stored as integer numerators over one positive common denominator with
    no common factor, which keeps arithmetic and evaluation in integers.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fr = [as_fraction(c) for c in coeffs]
        den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in fr), 1)
        self._set(_trim([c.numerator * (den // c.denominator) for c in fr]), den)

    @classmethod
    def from_int(cls, num: Sequence[int], den: int = 1) -> "RatPoly":
        self = cls.__new__(cls)
        if den <= 0:
            raise ValueError("denominator must be positive")
        self._set(_trim(list(num)), den)
        return self

    def _set(self, num: list[int], den: int) -> None:
        g = reduce(gcd, num, den)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        if not num:
            den = 1
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def x(cls) -> "RatPoly":
        return cls.from_int([0, 1])

    @classmethod
    def constant(cls, c) -> "RatPoly":
        return cls([c])

    # -- accessors --

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._num) - 1

    @property
    def leading(self) -> Fraction:
        return Fraction(self._num[-1], self._den) if self._num else Fraction(0)

    def is_zero(self) -> bool:
        return not self._num

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self._num[i], self._den) if 0 <= i < len(self._num) else Fraction(0)

    # -- arithmetic --

    def _lift(self, other) -> "RatPoly":
        return other if isinstance(other, RatPoly) else RatPoly([other])

    def __add__(self, other):
        o = self._lift(other)
        d = self._den * o._den // gcd(self._den, o._den)
        return RatPoly.from_int(_add_int([c * (d // self._den) for c in self._num], [c * (d // o._den) for c in o._num]), d)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly.from_int([-c for c in self._num], self._den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            return RatPoly.from_int(mul_int(self._num, other._num), self._den * other._den)
        q = as_fraction(other)
        return RatPoly.from_int([c * q.numerator for c in self._num], self._den * q.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = as_fraction(other)
        if q == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return self * (1 / q)

    def __call__(self, x) -> Fraction:
        q = as_fraction(x)
        return Fraction(horner_int(self._num, q.numerator, q.denominator), self._den * q.denominator ** max(self.degree, 0))

    def derivative(self) -> "RatPoly":
        return RatPoly.from_int([i * c for i, c in enumerate(self._num)][1:], self._den)

    def primitive(self) -> tuple[int, ...]:
        """Integer coefficients with gcd 1 and the same sign pattern as ``self``."""
        g = reduce(gcd, self._num, 0) or 1
        return tuple(c // g for c in self._num)

    # -- comparison/printing --

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == RatPoly([other])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self._num:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def evaluate(p: RatPoly, x) -> Fraction:
    """Exact value ``p(x)``."""
    return p(x)
