"""Exact real-root isolation with Sturm sequences.

Sequences are built on the square-free part of the input with primitive
integer remainders (each remainder divided by the gcd of its coefficients,
multipliers kept positive so signs are preserved).  For a square-free
sequence the sign-variation count is right-continuous at roots, so
``V(lo) - V(hi)`` counts the distinct roots in the half-open ``(lo, hi]``
without any endpoint perturbation.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import ceil, floor, gcd

from .darcais import bo_poly
from .exactnum import DomainError, as_fraction
from .parallel import parallel_map
from .ratpoly import RatPoly, horner_int

DEFAULT_WIDTH = Fraction(1, 10**4)


def _primitive(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    g = reduce(gcd, c, 0)
    return [x // g for x in c] if g > 1 else c


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Positive multiple of the remainder of ``a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    mult, sgn = abs(lc), (1 if lc > 0 else -1)
    while len(r) - 1 >= db and r:
        c = r[-1] * sgn
        shift = len(r) - 1 - db
        r = [x * mult for x in r]
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        r = _primitive(r)
    return r


def _int_exact_div(a: list[int], b: list[int]) -> list[int]:
    """Quotient ``a / b`` over Q (b divides a), scaled to a primitive integer list."""
    num = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(b) - 1] / b[-1]
        q[i] = c
        for j, y in enumerate(b):
            num[i + j] -= c * y
    assert not any(num), "inexact polynomial division"
    den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in q), 1)
    return _primitive([int(c * den) for c in q])


@lru_cache(maxsize=2048)
def _sturm_chain(prim: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """Sturm chain of the square-free part of ``prim`` and whether ``prim`` was square-free."""

    def build(p: list[int]) -> list[list[int]]:
        chain = [p]
        d = _primitive([i * c for i, c in enumerate(p)][1:])
        if not d:
            return chain
        chain.append(d)
        while len(chain[-1]) > 1:
            r = _prem(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-x for x in r])
        return chain

    p = list(prim)
    chain = build(p)
    squarefree = len(chain[-1]) <= 1
    if not squarefree:
        chain = build(_int_exact_div(p, chain[-1]))
    return tuple(tuple(s) for s in chain), squarefree


def _variations(chain, x: Fraction | None, at_inf: int = 0) -> int:
    signs = []
    for s in chain:
        if at_inf:
            v = s[-1] if at_inf > 0 or (len(s) - 1) % 2 == 0 else -s[-1]
        else:
            v = horner_int(s, x.numerator, x.denominator)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: RatPoly):
    if p.is_zero():
        raise DomainError("Sturm sequence of the zero polynomial")
    return _sturm_chain(p.primitive())


def sturm_count(p: RatPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``lo``/``hi`` may be ``None`` for minus/plus infinity.
    """
    chain, _ = sturm_chain(p)
    lo = None if lo is None else as_fraction(lo)
    hi = None if hi is None else as_fraction(hi)
    if lo is not None and hi is not None and not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    v_lo = _variations(chain, None, -1) if lo is None else _variations(chain, lo)
    v_hi = _variations(chain, None, 1) if hi is None else _variations(chain, hi)
    return v_lo - v_hi


def cauchy_bound(p: RatPoly) -> Fraction:
    """``1 + max |c_i / c_deg|``: every real root lies strictly inside ``(-B, B)``."""
    if p.degree < 1:
        raise DomainError("Cauchy bound needs degree >= 1")
    lead = p.leading
    return 1 + max(abs(c / lead) for c in p.coeffs[:-1])


# -- isolation ----------------------------------------------------------------


def _round_half_up(x: Fraction, digits: int) -> Fraction:
    scale = 10**digits
    return Fraction(floor(x * scale + Fraction(1, 2)), scale)


@dataclass(frozen=True)
class RootInterval:
    """Interval ``(lo, hi]`` holding exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity_note: str  # "simple" or "unknown"
    exact: Fraction | None = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = as_fraction(x)
        return self.lo < x <= self.hi

    def rounded(self, digits: int = 1) -> tuple[Fraction, ...]:
        """Distinct half-up roundings over the interval; two values mean the
        interval straddles a rounding boundary."""
        if self.exact is not None:
            return (_round_half_up(self.exact, digits),)
        a, b = _round_half_up(self.lo, digits), _round_half_up(self.hi, digits)
        return (a,) if a == b else (a, b)

    def __float__(self):
        return float(self.exact if self.exact is not None else (self.lo + self.hi) / 2)


def _bracket_largest(p: RatPoly, bound: Fraction):
    """``(lo, hi, count)`` with the largest root in ``(lo, hi]``, no root above
    ``hi`` and ``count`` roots inside, found by galloping over powers of two
    within the Cauchy bracket ``(-bound, bound]``."""
    if sturm_count(p, -bound, bound) == 0:
        return None
    if sturm_count(p, 0, bound) == 0:
        hi = Fraction(0)
        if p(0) == 0:
            return Fraction(-1), hi, sturm_count(p, -1, 0)
        t = Fraction(-1)
        while t > -bound and sturm_count(p, t, hi) == 0:
            hi, t = t, 2 * t
        t = max(t, -bound)
        return t, hi, sturm_count(p, t, hi)
    hi = bound
    t = Fraction(1)
    if sturm_count(p, t, hi) >= 1:
        while 2 * t < hi and sturm_count(p, 2 * t, hi) >= 1:
            t *= 2
        if 2 * t < hi:
            hi = 2 * t
        return t, hi, sturm_count(p, t, hi)
    hi = t
    t = t / 2
    while sturm_count(p, t, hi) == 0:
        hi, t = t, t / 2
    return t, hi, sturm_count(p, t, hi)


def largest_real_root(p: RatPoly, width=DEFAULT_WIDTH) -> RootInterval | None:
    """Enclosure of the largest real root of ``p``, or None if it has none."""
    width = as_fraction(width)
    if width <= 0:
        raise DomainError("width must be positive")
    if p.is_zero():
        raise DomainError("zero polynomial has no isolated roots")
    if p.degree < 1:
        return None
    _, squarefree = sturm_chain(p)
    bracket = _bracket_largest(p, Fraction(ceil(cauchy_bound(p))))
    if bracket is None:
        return None
    lo, hi, count = bracket
    while hi - lo > width or count > 1:
        mid = (lo + hi) / 2
        upper = sturm_count(p, mid, hi)
        if upper >= 1:
            lo, count = mid, upper
        else:
            hi = mid
    exact = hi if p(hi) == 0 else None
    return RootInterval(lo, hi, "simple" if squarefree else "unknown", exact)


def sign_change_verified(p: RatPoly, r: RootInterval) -> bool:
    """Independent check that ``r`` holds a root: exact zero at ``hi``, a sign
    change across the interval, or Sturm count one."""
    if r.exact is not None:
        return p(r.exact) == 0
    a, b = p(r.lo), p(r.hi)
    return (a < 0 < b) or (b < 0 < a) or sturm_count(p, r.lo, r.hi) == 1


def is_increasing_on(p: RatPoly, start) -> bool:
    """True iff ``p'(start) >= 0`` and ``p'`` has no real root beyond ``start``."""
    start = as_fraction(start)
    d = p.derivative()
    if d.is_zero():
        return False
    if d(start) < 0:
        return False
    if d.degree == 0:
        return True
    return sturm_count(d, start, None) == 0


# -- table of largest zeros of P_{a,b} ----------------------------------------


def _cell(args) -> tuple[int, int, RootInterval | None]:
    a, b, width = args
    return a, b, largest_real_root(bo_poly(a, b), width)


def table3(maxdim: int, width=DEFAULT_WIDTH, workers: int = 1) -> list[list[RootInterval | None]]:
    """Largest real zero of P_{a,b} for 1 <= a, b <= maxdim as a symmetric matrix
    (``out[a-1][b-1]``).  Only cells with b <= a are computed; the mirror shares them."""
    if maxdim < 1:
        raise DomainError("maxdim must be >= 1")
    width = as_fraction(width)
    cells = [(a, b, width) for a in range(1, maxdim + 1) for b in range(1, a + 1)]
    out: list[list[RootInterval | None]] = [[None] * maxdim for _ in range(maxdim)]
    for a, b, r in parallel_map(_cell, cells, workers):
        out[a - 1][b - 1] = out[b - 1][a - 1] = r
    return out


def _fmt_round(vals: tuple[Fraction, ...]) -> str:
    return "|".join(f"{float(v):.1f}" for v in vals)


def compare_cell(r: RootInterval, printed: str) -> str:
    """``match``, ``ulp`` (one unit in the last printed place off) or ``mismatch``."""
    target = Fraction(printed)
    rounded = r.rounded(1)
    if target in rounded:
        return "match"
    if any(abs(v - target) == Fraction(1, 10) for v in rounded):
        return "ulp"
    return "mismatch"


def table3_csv(table, published=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["a", "b", "lo", "hi", "rounded"] + (["published", "status"] if published else [])
    w.writerow(header)
    n = len(table)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            r = table[a - 1][b - 1]
            row = [a, b, str(r.lo), str(r.hi), _fmt_round(r.rounded(1))]
            if published:
                if a <= len(published) and b <= len(published[0]):
                    row += [published[a - 1][b - 1], compare_cell(r, published[a - 1][b - 1])]
                else:
                    row += ["", ""]
            w.writerow(row)
    return buf.getvalue()


def table3_markdown(table) -> str:
    n = len(table)
    lines = ["| a\\b | " + " | ".join(str(b) for b in range(1, n + 1)) + " |"]
    lines.append("|" + "---|" * (n + 1))
    for a in range(1, n + 1):
        cells = [_fmt_round(table[a - 1][b - 1].rounded(1)) for b in range(1, n + 1)]
        lines.append(f"| {a} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
