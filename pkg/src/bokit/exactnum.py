"""Exact rationals, rigorous enclosures of ``ln`` and certified sign decisions.

Scalars are :class:`fractions.Fraction` throughout.  Transcendental quantities
only ever appear as a :class:`RationalInterval` whose endpoints are exact
rationals guaranteed to bracket the true value, so every comparison made on
top of them is a proof rather than a float heuristic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction]

DEFAULT_START_BITS = 32
DEFAULT_MAX_BITS = 2**14


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UndecidedSign(ArithmeticError):
    """Refinement reached its precision cap with zero still enclosed."""

    def __init__(self, interval: "RationalInterval", bits: int):
        self.interval = interval
        self.bits = bits
        super().__init__(
            f"sign undecided at {bits} bits: 0 in [{float(interval.lo):.6g}, {float(interval.hi):.6g}]"
        )


def as_fraction(value: RationalLike | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: RationalLike) -> "RationalInterval":
        q = as_fraction(value)
        return cls(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def _coerce(self, other) -> "RationalInterval":
        if isinstance(other, RationalInterval):
            return other
        return RationalInterval.point(other)

    def __add__(self, other):
        o = self._coerce(other)
        return RationalInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o.is_point():
            c = o.lo
            return RationalInterval(self.lo * c, self.hi * c) if c >= 0 else RationalInterval(self.hi * c, self.lo * c)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def sign(self) -> int | None:
        """Proven sign of every point in the interval, or None if 0 is inside
        a non-degenerate interval."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


# -- ln -----------------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@lru_cache(maxsize=64)
def _atanh_fixed(num: int, den: int, w: int) -> tuple[int, int]:
    """Integers ``lo <= atanh(num/den) * 2**w <= hi`` for ``0 <= num/den <= 1/3``."""
    if num == 0:
        return 0, 0
    t2n, t2d = num * num, den * den
    scale = 1 << w
    plo = (num * scale) // den
    phi = _ceil_div(num * scale, den)
    slo = shi = 0
    j = 1
    while True:
        slo += plo // j
        shi += _ceil_div(phi, j)
        plo = plo * t2n // t2d
        phi = _ceil_div(phi * t2n, t2d)
        j += 2
        # remaining terms sum to at most t**j / (j * (1 - t**2))
        tail = _ceil_div(phi * t2d, j * (t2d - t2n))
        if tail <= 1:
            return slo, shi + tail


def _floor_log2(q: Fraction) -> int:
    n, d = q.numerator, q.denominator
    e = n.bit_length() - d.bit_length()
    while (n << max(-e, 0)) < (d << max(e, 0)):
        e -= 1
    while (n << max(-e - 1, 0)) >= (d << max(e + 1, 0)):
        e += 1
    return e


def _reduce(q: Fraction) -> tuple[int, Fraction]:
    """Split ``q = 2**k * r`` with ``r`` in ``[2/3, 4/3]``."""
    k = _floor_log2(q * Fraction(3, 2))
    r = q / (Fraction(2) ** k) if k >= 0 else q * (1 << -k)
    return k, r


@lru_cache(maxsize=4096)
def ln_enclosure(q: RationalLike, precision_bits: int) -> RationalInterval:
    """Enclosure of ``ln(q)`` of width at most ``2**-precision_bits``.

    ``q = 2**k * r`` with ``r`` near 1; both ``ln r`` and ``ln 2 = 2 atanh(1/3)``
    come from the series ``atanh t = sum t**(2i+1) / (2i+1)`` evaluated in
    directed-rounded fixed point with an explicit geometric tail bound.
    """
    q = as_fraction(q)
    if q <= 0:
        raise DomainError(f"ln undefined for {q}")
    if precision_bits < 1:
        raise DomainError("precision_bits must be >= 1")
    if q == 1:
        return RationalInterval(Fraction(0), Fraction(0))
    k, r = _reduce(q)
    t = (r - 1) / (r + 1)
    guard = max(8, (abs(k) + 2).bit_length() + (precision_bits + 16).bit_length() + 4)
    while True:
        w = precision_bits + guard
        alo, ahi = _atanh_fixed(abs(t.numerator), t.denominator, w)
        if t < 0:
            alo, ahi = -ahi, -alo
        llo, lhi = _atanh_fixed(1, 3, w) if k else (0, 0)
        if k >= 0:
            lo, hi = k * 2 * llo + 2 * alo, k * 2 * lhi + 2 * ahi
        else:
            lo, hi = k * 2 * lhi + 2 * alo, k * 2 * llo + 2 * ahi
        if (hi - lo) << precision_bits <= 1 << w:
            return RationalInterval(Fraction(lo, 1 << w), Fraction(hi, 1 << w))
        guard += 8


# -- certified expressions ----------------------------------------------------


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class Expr:
    """A finite composition of rational constants and logarithms.

    ``enclose(bits)`` returns an interval containing the exact value whose
    width shrinks as ``bits`` grows; operators build larger expressions.
    """

    def enclose(self, bits: int) -> RationalInterval:
        raise NotImplementedError

    @staticmethod
    def wrap(value) -> "Expr":
        if isinstance(value, Expr):
            return value
        return Const(as_fraction(value))

    def __add__(self, other):
        return Add(self, Expr.wrap(other))

    def __radd__(self, other):
        return Add(Expr.wrap(other), self)

    def __sub__(self, other):
        return Add(self, Neg(Expr.wrap(other)))

    def __rsub__(self, other):
        return Add(Expr.wrap(other), Neg(self))

    def __mul__(self, other):
        return Mul(self, Expr.wrap(other))

    def __rmul__(self, other):
        return Mul(Expr.wrap(other), self)

    def __neg__(self):
        return Neg(self)


@dataclass(frozen=True, eq=False)
class Const(Expr):
    value: Fraction

    def enclose(self, bits):
        return RationalInterval.point(self.value)

    def __repr__(self):
        return f"Const({self.value})"


@dataclass(frozen=True, eq=False)
class Ln(Expr):
    arg: Fraction

    def enclose(self, bits):
        return ln_enclosure(self.arg, bits)

    def __repr__(self):
        return f"Ln({self.arg})"


@dataclass(frozen=True, eq=False)
class Add(Expr):
    left: Expr
    right: Expr

    def enclose(self, bits):
        return self.left.enclose(bits) + self.right.enclose(bits)


@dataclass(frozen=True, eq=False)
class Mul(Expr):
    left: Expr
    right: Expr

    def enclose(self, bits):
        return self.left.enclose(bits) * self.right.enclose(bits)


@dataclass(frozen=True, eq=False)
class Neg(Expr):
    inner: Expr

    def enclose(self, bits):
        return -self.inner.enclose(bits)


def ln(q: RationalLike) -> Ln:
    q = as_fraction(q)
    if q <= 0:
        raise DomainError(f"ln undefined for {q}")
    return Ln(q)


def enclose(expr, bits: int = DEFAULT_START_BITS) -> RationalInterval:
    return Expr.wrap(expr).enclose(bits)


_max_bits = DEFAULT_MAX_BITS


def set_max_bits(bits: int) -> None:
    """Process-wide precision cap used by :func:`sign_of` when none is given."""
    global _max_bits
    if bits < DEFAULT_START_BITS:
        raise DomainError(f"precision cap must be >= {DEFAULT_START_BITS} bits")
    _max_bits = bits


def sign_of(expr, start_bits: int = DEFAULT_START_BITS, max_bits: int | None = None) -> Sign:
    """Certified sign of ``expr``.

    Precision doubles from ``start_bits`` until the enclosure excludes zero or
    collapses to the point 0.  Raises :class:`UndecidedSign` past ``max_bits``
    (default: the cap set by :func:`set_max_bits`).
    """
    if max_bits is None:
        max_bits = _max_bits
    expr = Expr.wrap(expr)
    bits = start_bits
    while True:
        iv = expr.enclose(bits)
        s = iv.sign()
        if s is not None:
            return Sign(s)
        if bits >= max_bits:
            raise UndecidedSign(iv, bits)
        bits = min(2 * bits, max_bits)
