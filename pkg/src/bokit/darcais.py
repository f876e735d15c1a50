"""D'Arcais polynomials P_n(x) and the polynomials built from them.

``P_0 = 1`` and ``P_n(x) = (x/n) * sum_{k=1}^{n} sigma(k) P_{n-k}(x)``.
Internally the builder works with ``Q_n = n! P_n``, which has integer
coefficients and satisfies

    Q_n = x * sum_k sigma(k) * (n-1)!/(n-k)! * Q_{n-k},

so the whole prefix is computed without a single rational reduction.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

from .exactnum import DomainError, as_fraction
from .partitions import sigma_table
from .ratpoly import RatPoly

CACHE_FORMAT = "bokit-darcais-cache"
CACHE_VERSION = 1

_lock = threading.Lock()
_Q: list[list[int]] = [[1]]
_P: dict[int, RatPoly] = {}


def _extend_q(n: int) -> None:
    sig = sigma_table(n)
    for m in range(len(_Q), n + 1):
        acc = [0] * (m + 1)
        ff = 1  # (m-1)!/(m-k)!
        for k in range(1, m + 1):
            if k > 1:
                ff *= m - k + 1
            w = sig[k] * ff
            for i, c in enumerate(_Q[m - k]):
                acc[i + 1] += w * c
        _Q.append(acc)


def darcais_poly(n: int) -> RatPoly:
    """P_n(x) with exact coefficients; the prefix P_0..P_n is memoized."""
    if n < 0:
        raise DomainError("n must be >= 0")
    with _lock:
        if n not in _P:
            if len(_Q) <= n:
                _extend_q(n)
            _P[n] = RatPoly.from_int(_Q[n], factorial(n))
        return _P[n]


def darcais_values(x, N: int) -> tuple[Fraction, ...]:
    """P_0(x), ..., P_N(x) from the recurrence applied to values.

    With ``x = u/v`` the scaled values ``W_n = n! v^n P_n(u/v)`` are integers:
    ``W_n = u * sum_k sigma(k) (n-1)!/(n-k)! v^(k-1) W_{n-k}``.
    """
    x = as_fraction(x)
    if N < 0:
        raise DomainError("N must be >= 0")
    u, v = x.numerator, x.denominator
    sig = sigma_table(N)
    W = [1]
    for n in range(1, N + 1):
        total = 0
        ff = 1
        vp = 1
        for k in range(1, n + 1):
            if k > 1:
                ff *= n - k + 1
                vp *= v
            total += sig[k] * ff * vp * W[n - k]
        W.append(u * total)
    out = []
    fact = 1
    vn = 1
    for n in range(N + 1):
        if n:
            fact *= n
            vn *= v
        out.append(Fraction(W[n], fact * vn))
    return tuple(out)


def evaluate(p: RatPoly, x) -> Fraction:
    return p(x)


def bo_poly(a: int, b: int) -> RatPoly:
    """P_{a,b}(x) = P_a(x) P_b(x) - P_{a+b}(x)."""
    if a < 1 or b < 1:
        raise DomainError("a and b must be >= 1")
    p = darcais_poly(a) * darcais_poly(b) - darcais_poly(a + b)
    lead = Fraction(1, factorial(a) * factorial(b)) - Fraction(1, factorial(a + b))
    assert p.degree == a + b and p.leading == lead > 0, (a, b)
    return p


def delta_poly(a: int, b: int) -> RatPoly:
    """Log-concavity defect P_{a-1} P_{b+1} - P_a P_b for a > b >= 0."""
    if not a > b >= 0:
        raise DomainError(f"need a > b >= 0, got a={a}, b={b}")
    return darcais_poly(a - 1) * darcais_poly(b + 1) - darcais_poly(a) * darcais_poly(b)


def laguerre_lower_bound(n: int, m: int, x) -> Fraction:
    """``sum_{k=1}^{m} C(n-1, k-1) x^k / k!`` -- a lower bound for P_n(x), x >= 0."""
    x = as_fraction(x)
    if n < 1 or m < 1:
        raise DomainError("n and m must be >= 1")
    if x < 0:
        raise DomainError("bound only holds for x >= 0")
    return sum((comb(n - 1, k - 1) * x**k / factorial(k) for k in range(1, m + 1)), Fraction(0))


# -- persistent cache ---------------------------------------------------------


def _poly_record(n: int, p: RatPoly) -> dict:
    return {"n": n, "coeffs": [[str(c.numerator), str(c.denominator)] for c in p.coeffs]}


def _poly_from_record(rec: dict) -> RatPoly:
    return RatPoly(Fraction(int(num), int(den)) for num, den in rec["coeffs"])


def write_polys(path: str | Path, polys: dict[int, RatPoly]) -> None:
    """Atomically write polynomials in the cache file format."""
    path = Path(path)
    header = {"format": CACHE_FORMAT, "version": CACHE_VERSION}
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(header, sort_keys=True) + "\n")
            for n in sorted(polys):
                fh.write(json.dumps(_poly_record(n, polys[n]), sort_keys=True) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_polys(path: str | Path) -> dict[int, RatPoly]:
    with open(path, encoding="utf-8") as fh:
        lines = [line for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty cache file")
    header = json.loads(lines[0])
    if header.get("format") != CACHE_FORMAT or header.get("version") != CACHE_VERSION:
        raise ValueError(f"{path}: unsupported cache header {header}")
    out = {}
    for line in lines[1:]:
        rec = json.loads(line)
        out[int(rec["n"])] = _poly_from_record(rec)
    return out


class PolyCache:
    """P_n keyed by n, optionally backed by a JSON-lines file.

    Loaded entries are used as-is; ``save`` rewrites the file atomically.
    Only P_n is cached -- products and differences are always rederived.
    """

    version = CACHE_VERSION

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._polys: dict[int, RatPoly] = {}
        self._dirty = False
        if self.path and self.path.exists():
            self._polys = read_polys(self.path)

    def __contains__(self, n: int) -> bool:
        return n in self._polys

    def __len__(self):
        return len(self._polys)

    def get(self, n: int) -> RatPoly:
        p = self._polys.get(n)
        if p is None:
            p = self._polys[n] = darcais_poly(n)
            self._dirty = True
        return p

    def prefix(self, n: int) -> list[RatPoly]:
        return [self.get(m) for m in range(n + 1)]

    def save(self) -> None:
        if self.path and self._dirty:
            write_polys(self.path, self._polys)
            self._dirty = False
