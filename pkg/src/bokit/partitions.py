"""Divisor sums, partition numbers and k-colored partition numbers.

The production path for every sequence is the divisor-sum recurrence
``n * c(n) = k * sum_{j=1}^{n} sigma(j) * c(n - j)``; the two oracles
(Euler's pentagonal recurrence and direct expansion of the Euler product)
share no code with it and exist only to cross-check it.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from operator import mul
from pathlib import Path

from .exactnum import DomainError

TABLE_FORMAT = "bokit-partition-table"
TABLE_VERSION = 1


@dataclass(frozen=True)
class PartitionTable:
    """Values ``c(0..N)`` of a partition-counting sequence.

    ``kind`` is ``"classic"`` for p(n) or ``"colored"`` for the k-colored
    numbers p_{-k}(n); classic tables always carry ``k == 1``.
    """

    kind: str
    k: int
    values: tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


# -- sigma --------------------------------------------------------------------

_sigma_lock = threading.Lock()
_sigma_cache: list[int] = [0]


def sigma_table(N: int) -> tuple[int, ...]:
    """sigma(0..N) by divisor sieve (index 0 holds a placeholder 0)."""
    global _sigma_cache
    if N < 0:
        raise DomainError("N must be >= 0")
    with _sigma_lock:
        if len(_sigma_cache) <= N:
            size = max(N, 2 * (len(_sigma_cache) - 1), 64)
            table = [0] * (size + 1)
            for d in range(1, size + 1):
                for m in range(d, size + 1, d):
                    table[m] += d
            _sigma_cache = table
        return tuple(_sigma_cache[: N + 1])


def sigma(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    if n < 1:
        raise DomainError(f"sigma undefined for {n}")
    if n < len(_sigma_cache):
        return _sigma_cache[n]
    total = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            term, power = 1, 1
            while m % p == 0:
                m //= p
                power *= p
                term += power
            total *= term
        p += 1 if p == 2 else 2
    if m > 1:
        total *= m + 1
    return total


# -- production recurrence ----------------------------------------------------

_tables_lock = threading.Lock()
_tables: dict[int, list[int]] = {}


def _recurrence_values(k: int, N: int) -> list[int]:
    with _tables_lock:
        values = _tables.setdefault(k, [1])
        if len(values) <= N:
            sig = sigma_table(N)
            for n in range(len(values), N + 1):
                total = k * sum(map(mul, sig[1 : n + 1], reversed(values)))
                q, rem = divmod(total, n)
                if rem:
                    raise ArithmeticError(f"inexact division at n={n} (k={k}): table corrupted")
                values.append(q)
        return values[: N + 1]


def partition_numbers(N: int) -> PartitionTable:
    """p(0..N) from ``n p(n) = sum sigma(k) p(n-k)``; memoized across calls."""
    if N < 0:
        raise DomainError("N must be >= 0")
    return PartitionTable("classic", 1, tuple(_recurrence_values(1, N)))


def colored_partition_numbers(k: int, N: int) -> PartitionTable:
    """p_{-k}(0..N), i.e. the D'Arcais values P_n(k)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if N < 0:
        raise DomainError("N must be >= 0")
    kind = "classic" if k == 1 else "colored"
    return PartitionTable(kind, k, tuple(_recurrence_values(k, N)))


# -- oracles ------------------------------------------------------------------


def pentagonal_oracle(N: int) -> PartitionTable:
    """p(0..N) via Euler's pentagonal number theorem."""
    if N < 0:
        raise DomainError("N must be >= 0")
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            g2 = g1 + j
            term = p[n - g1] + (p[n - g2] if g2 <= n else 0)
            total += term if j % 2 else -term
            j += 1
        p[n] = total
    return PartitionTable("classic", 1, tuple(p))


def euler_product_oracle(k: int, N: int) -> PartitionTable:
    """Coefficients of ``prod_{j>=1} (1 - q^j)^(-k)`` truncated at q^N.

    Multiplies by the geometric series ``1/(1 - q^j)`` k times for each j.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if N < 0:
        raise DomainError("N must be >= 0")
    c = [1] + [0] * N
    for j in range(1, N + 1):
        for _ in range(k):
            for n in range(j, N + 1):
                c[n] += c[n - j]
    return PartitionTable("classic" if k == 1 else "colored", k, tuple(c))


def binomial_lower_bound(n: int, m: int) -> Fraction:
    """``sum_{k=1}^{m} C(n-1, k-1) / k!``, a lower bound for p(n).

    Each partition into exactly k parts arises from at most k! of the
    C(n-1, k-1) compositions into k parts.
    """
    if n < 1 or m < 1:
        raise DomainError("n and m must be >= 1")
    return sum((Fraction(comb(n - 1, j - 1), factorial(j)) for j in range(1, m + 1)), Fraction(0))


# -- persistence --------------------------------------------------------------


def dump_table(table: PartitionTable, path: str | Path) -> None:
    """Write a table as JSON lines: a header record then one record per index."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        header = {"format": TABLE_FORMAT, "version": TABLE_VERSION, "kind": table.kind, "k": table.k, "n_max": table.n_max}
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for n, v in enumerate(table.values):
            fh.write(json.dumps({"n": n, "value": str(v)}, sort_keys=True) + "\n")
    tmp.replace(path)


def load_table(path: str | Path) -> PartitionTable:
    with open(path, encoding="utf-8") as fh:
        lines = [line for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty table file")
    header = json.loads(lines[0])
    if header.get("format") != TABLE_FORMAT or header.get("version") != TABLE_VERSION:
        raise ValueError(f"{path}: unsupported table header {header}")
    values = []
    for expected, line in enumerate(lines[1:]):
        rec = json.loads(line)
        if rec["n"] != expected:
            raise ValueError(f"{path}: index {rec['n']} out of order (expected {expected})")
        values.append(int(rec["value"]))
    if len(values) != header["n_max"] + 1:
        raise ValueError(f"{path}: truncated table")
    return PartitionTable(header["kind"], header["k"], tuple(values))
