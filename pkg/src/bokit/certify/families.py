"""The four induction proofs and the constants that parametrize them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

from ..darcais import darcais_values
from ..partitions import colored_partition_numbers


@dataclass(frozen=True)
class ProofFamily:
    """Constants of one induction proof.

    ``A`` is the smallest admissible part, ``B`` the smallest n of the
    statement S(n), ``N0`` the end of the computer-checked base range.  The
    final inequality is ``-C a^2 (1 + ln 2a) + sum_{l=1}^{m} C(a-2, l-1) x^l / l!``
    with ``C = final_constant``.  ``threshold`` is the stated first a for
    which it is positive; ``early_threshold`` the stated first a for which
    the bracket with the exact value P_{a-1}(x) in place of the sum is.

    ``base_square`` > 0 means the base case covers every pair with
    ``a, b <= base_square`` (largest zeros of P_{a,b}); otherwise it covers
    ``B <= a + b <= N0`` at the single point x.
    """

    name: str
    A: int
    B: int
    N0: int
    final_constant: Fraction
    m: int
    x: Fraction
    threshold: int
    early_threshold: int | None = None
    base_square: int = 0
    r2_strict: bool = True

    @property
    def x_is_integer(self) -> bool:
        return self.x.denominator == 1

    def values(self, N: int) -> tuple:
        """P_0(x), ..., P_N(x) at the family's base point (ints when x is integral)."""
        return _values(self.x, N)


@lru_cache(maxsize=16)
def _values(x: Fraction, N: int) -> tuple:
    if x.denominator == 1:
        return colored_partition_numbers(int(x), N).values
    return darcais_values(x, N)


BO = ProofFamily("BO", A=2, B=10, N0=2184, final_constant=Fraction(48), m=5, x=Fraction(1), threshold=1093)
X3 = ProofFamily(
    "X3", A=1, B=2, N0=14, final_constant=Fraction(2), m=6, x=Fraction(3), threshold=12, early_threshold=8, base_square=14
)
X2 = ProofFamily("X2", A=1, B=5, N0=28, final_constant=Fraction(3), m=5, x=Fraction(2), threshold=15, r2_strict=False)
X18 = ProofFamily(
    "X18",
    A=1,
    B=5,
    N0=28,
    final_constant=Fraction(19, 5),
    m=9,
    x=Fraction(9, 5),
    threshold=30,
    early_threshold=15,
    base_square=28,
)

FAMILIES = {f.name.lower(): f for f in (BO, X3, X2, X18)}


def get_family(name: str) -> ProofFamily:
    try:
        return FAMILIES[name.lower()]
    except KeyError:
        raise KeyError(f"unknown proof family {name!r}; choose from {sorted(FAMILIES)}") from None


# -- derived constants --------------------------------------------------------


def r3_weight(family: ProofFamily) -> Fraction:
    """Coefficient rho in ``R3 > -rho * b P_b(x) (1 + ln(a+b))``, rebuilt from values.

    BO: R32 contributes 1/2 (from (a-1)/(a+b) <= 1 <= b/2) and R31 at most
    ``5 (p(8) - p(2)^2)`` = 90 <= (90 / (2 p(2))) b p(b).  X2: the single negative
    term -sigma(a-1)/a <= (1 + ln a), weighted by 1/(P_1(2)).  X18: the constant
    of the R31 bound over P_1(x), rounded up to tenths.  X3 has R3 >= 0.
    """
    v = family.values(12)
    if family.name == "BO":
        summands = family.B - 2 * family.A - 1
        r31 = summands * (v[family.B - family.A] - v[family.A] * v[family.A])
        return Fraction(1, 2) + Fraction(r31, family.A * v[family.A])
    if family.name == "X2":
        return Fraction(1) / v[1]
    if family.name == "X18":
        return Fraction(ceil(r31_constant_x18() / v[1] * 10), 10)
    return Fraction(0)


def r31_constant_x18() -> Fraction:
    """Exact ``-(P_{2,1}(9/5) + P_{3,1}(9/5))``."""
    v = X18.values(4)
    return -((v[2] * v[1] - v[3]) + (v[3] * v[1] - v[4]))


def derived_constant(family: ProofFamily) -> Fraction:
    """``2 (1 + rho)``: the L bound contributes 1, R3 contributes rho, the 2 comes
    from writing everything against ``b P_b / (2 a^2)``."""
    return 2 * (1 + r3_weight(family))


assert derived_constant(BO) == BO.final_constant == 2 * (1 + Fraction(1 + 45, 2))
