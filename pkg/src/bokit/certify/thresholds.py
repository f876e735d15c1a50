"""Final-step expressions of the induction and where they turn positive."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from ..exactnum import DEFAULT_START_BITS, DomainError, Expr, RationalInterval, Sign, ln, sign_of
from .families import ProofFamily


def binomial_sum(family: ProofFamily, a: int) -> Fraction:
    """``sum_{l=1}^{m} C(a-2, l-1) x^l / l!`` -- the lower bound replacing P_{a-1}(x)."""
    x = family.x
    return sum((comb(a - 2, l - 1) * x**l / factorial(l) for l in range(1, family.m + 1)), Fraction(0))


def final_expr(family: ProofFamily, a: int) -> Expr:
    if a < 2:
        raise DomainError("final expression needs a >= 2")
    C = family.final_constant
    return -C * a * a * (1 + ln(2 * a)) + binomial_sum(family, a)


def final_expression(family: ProofFamily, a: int, bits: int = DEFAULT_START_BITS) -> RationalInterval:
    """Enclosure of the family's final bracketed expression at ``a``."""
    return final_expr(family, a).enclose(bits)


def early_expr(family: ProofFamily, a: int, values=None) -> Expr:
    """``-C a^2 (1 + ln 2a) + P_{a-1}(x)``: the bracket before the binomial bound."""
    if a < 2:
        raise DomainError("early expression needs a >= 2")
    v = values if values is not None else family.values(a - 1)
    return -family.final_constant * a * a * (1 + ln(2 * a)) + v[a - 1]


@dataclass
class ThresholdReport:
    family: str
    a_max: int
    minimal: int | None  # first a* with the expression positive on [a*, a_max]
    stated: int | None
    positive_below: list[int] = field(default_factory=list)  # isolated positives left of a*
    sign_at_stated_minus_one: int | None = None

    @property
    def confirmed(self) -> bool:
        return self.stated is not None and self.minimal == self.stated

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "a_max": self.a_max,
            "minimal": self.minimal,
            "stated": self.stated,
            "confirmed": self.confirmed,
            "positive_below_minimal": self.positive_below,
            "sign_at_stated_minus_one": self.sign_at_stated_minus_one,
        }


def _scan(signs: dict[int, Sign], a_max: int, stated: int | None, family: str) -> ThresholdReport:
    a = a_max
    while a >= 2 and signs[a] == Sign.POSITIVE:
        a -= 1
    minimal = a + 1 if a + 1 <= a_max else None
    below = [b for b in range(2, a + 1) if signs[b] == Sign.POSITIVE]
    at = int(signs[stated - 1]) if stated is not None and 2 <= stated - 1 <= a_max else None
    return ThresholdReport(family, a_max, minimal, stated, below, at)


def threshold_scan(family: ProofFamily, a_max: int) -> ThresholdReport:
    """Certified sign of the final expression for every a in [2, a_max]."""
    if a_max < 2:
        raise DomainError("a_max must be >= 2")
    signs = {a: sign_of(final_expr(family, a)) for a in range(2, a_max + 1)}
    return _scan(signs, a_max, family.threshold, family.name)


def early_threshold_scan(family: ProofFamily, a_max: int) -> ThresholdReport:
    """As :func:`threshold_scan` for the bracket with the exact P_{a-1}(x)."""
    v = family.values(a_max)
    signs = {a: sign_of(early_expr(family, a, v)) for a in range(2, a_max + 1)}
    return _scan(signs, a_max, family.early_threshold, family.name)


# -- tail ---------------------------------------------------------------------


@dataclass
class TailCertificate:
    family: str
    start: int
    verdict: bool
    first_stratum: int | None = None  # bit length beta0 of the first induction stratum
    direct_range: tuple[int, int] | None = None  # [start, 2^(beta0-1) - 1], checked one by one
    witness: int | None = None  # failing a (direct range) or stratum
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "start": self.start,
            "verdict": self.verdict,
            "first_stratum": self.first_stratum,
            "direct_range": list(self.direct_range) if self.direct_range else None,
            "witness": self.witness,
            "reason": self.reason,
        }


def _leading(family: ProofFamily, a: int) -> Fraction:
    j = family.m - 1
    return comb(a - 2, j) * family.x**family.m / factorial(family.m)


def _log_bound(beta: int) -> Expr:
    # 1 + ln(2a) < 1 + (beta + 1) ln 2 for a < 2^beta
    return 1 + (beta + 1) * ln(2)


def stratum_holds(family: ProofFamily, beta: int) -> bool:
    """Leading binomial term at ``2^(beta-1)`` beats ``C 4^beta (1 + (beta+1) ln 2)``."""
    lhs = _leading(family, 2 ** (beta - 1))
    return sign_of(lhs - family.final_constant * 4**beta * _log_bound(beta)) == Sign.POSITIVE


def ratio_step_holds(family: ProofFamily, beta: int) -> bool:
    """``(2^j - 4) U(beta) >= 4 ln 2`` with ``U = 1 + (beta+1) ln 2``: doubling a
    multiplies the leading term by at least 2^j while the right side grows by
    the factor ``4 U(beta+1)/U(beta) = 4 (1 + ln 2 / U(beta))``.  U increases
    with beta so the check at the first stratum covers all later ones."""
    j = family.m - 1
    if 2 ** (beta - 1) - 2 < j:
        return False
    ratio = _leading(family, 2**beta) / _leading(family, 2 ** (beta - 1))
    if ratio < 2**j:
        return False
    return sign_of((2**j - 4) * _log_bound(beta) - 4 * ln(2)) != Sign.NEGATIVE


def tail_certificate(family: ProofFamily, start: int, max_beta: int = 64) -> TailCertificate:
    """Certify the final expression positive for every a >= ``start``.

    a in [2^(b-1), 2^b) is handled stratum by stratum: the expression exceeds
    its leading term, which is nondecreasing in a, while
    ``C a^2 (1 + ln 2a) < C 4^b (1 + (b+1) ln 2)``.  One verified stratum plus
    the ratio step gives all later strata; a in [start, 2^(b0-1)) is checked
    directly.
    """
    if start < family.threshold:
        raise DomainError(f"tail start {start} below the stated threshold {family.threshold}")
    beta = max(start.bit_length(), 2)
    if 2 ** (beta - 1) < start:
        beta += 1
    while beta <= max_beta:
        if stratum_holds(family, beta) and ratio_step_holds(family, beta):
            break
        beta += 1
    else:
        return TailCertificate(family.name, start, False, witness=max_beta, reason="no inductive stratum found")
    hi = 2 ** (beta - 1) - 1
    for a in range(start, hi + 1):
        if sign_of(final_expr(family, a)) != Sign.POSITIVE:
            return TailCertificate(family.name, start, False, beta, (start, hi), a, "direct check failed")
    return TailCertificate(family.name, start, True, beta, (start, hi) if hi >= start else None)
