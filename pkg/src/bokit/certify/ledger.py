"""Replay of one induction step with exact values.

For ``n = a + b`` the recurrence splits ``P_a P_b - P_n = x (L + R)`` with

    L   = -sum_{k=1}^{b} sigma(k+a) / n * V(b-k)
    f_k = sigma(k)/a * V(a-k) V(b) - sigma(k)/n * V(n-k)
    R   = R1 + R2 + R3,   R1 = f_1,  R2 = f_2..f_{k0-1},  R3 = f_{k0}..f_a

and R3 splits further at a - A.  Every bound claimed for these pieces is
checked as a certified inequality on the exact values; ``V(n) = P_n(x)`` at
the family's base point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum import DomainError, Expr, RationalInterval, Sign, ln, sign_of
from ..partitions import sigma_table
from .families import ProofFamily, r3_weight, r31_constant_x18
from .thresholds import binomial_sum, final_expr


class CertificateFailure(AssertionError):
    """A bound in the replayed chain does not hold."""

    def __init__(self, ledger: "CertificateLedger"):
        self.ledger = ledger
        names = ", ".join(t.name for t in ledger.failed())
        super().__init__(f"{ledger.family} a={ledger.a} b={ledger.b}: failed {names}")


@dataclass
class LedgerTerm:
    name: str
    value: Fraction
    relation: str  # ">", ">=" or "=="
    bound: str  # human-readable right-hand side
    enclosure: RationalInterval  # of value - bound
    verdict: bool
    strict: bool | None = None  # for sums of terms: whether every term is > 0
    required: bool = True  # False: recorded but not part of the chain
    claimed: bool = True  # False: evaluated for information only, nothing is stated about it

    def as_dict(self) -> dict:
        d = {
            "name": self.name,
            "value": str(self.value),
            "relation": self.relation,
            "bound": self.bound,
            "margin_lo": str(self.enclosure.lo),
            "margin_hi": str(self.enclosure.hi),
            "verdict": self.verdict,
        }
        if self.strict is not None:
            d["strict"] = self.strict
        if not self.required:
            d["required"] = False
        if not self.claimed:
            d["claimed"] = False
        return d


@dataclass
class CertificateLedger:
    family: str
    a: int
    b: int
    k0: int
    inductive: bool = True  # outside the base range, so the chain must close here
    terms: list[LedgerTerm] = field(default_factory=list)
    final: RationalInterval | None = None
    final_sign: int | None = None

    def term(self, name: str) -> LedgerTerm:
        for t in self.terms:
            if t.name == name:
                return t
        raise KeyError(name)

    def failed(self) -> list[LedgerTerm]:
        """Failed terms the chain depends on."""
        return [t for t in self.terms if t.required and not t.verdict]

    def discrepancies(self) -> list[LedgerTerm]:
        """Failed side claims; they do not break the chain."""
        return [t for t in self.terms if t.claimed and not t.required and not t.verdict]

    @property
    def passed(self) -> bool:
        return not self.failed()

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "a": self.a,
            "b": self.b,
            "k0": self.k0,
            "inductive": self.inductive,
            "terms": [t.as_dict() for t in self.terms],
            "final": {"lo": str(self.final.lo), "hi": str(self.final.hi), "sign": self.final_sign} if self.final else None,
            "passed": self.passed,
        }


def k0(family: ProofFamily, a: int, b: int) -> int:
    """Split index ``a - max(B - b, A) + 1`` between R2 and R3."""
    if not (a >= b >= family.A and a + b >= family.B):
        raise DomainError(f"{family.name}: need a >= b >= {family.A} and a + b >= {family.B}, got ({a}, {b})")
    return a - max(family.B - b, family.A) + 1


def _check(
    name: str, value: Fraction, relation: str, bound, label: str, required: bool = True, claimed: bool = True
) -> LedgerTerm:
    diff = Expr.wrap(value) - bound
    s = sign_of(diff)
    ok = {">": s == Sign.POSITIVE, ">=": s != Sign.NEGATIVE, "==": s == Sign.ZERO}[relation]
    return LedgerTerm(name, value, relation, label, diff.enclose(32), ok, required=required, claimed=claimed)


def replay_step(family: ProofFamily, a: int, b: int, values=None, raise_on_failure: bool = True) -> CertificateLedger:
    """Recompute every piece of the induction step at ``(a, b)`` and certify
    each of its bounds.

    The pieces are always checked.  The closing terms (the bracket and, from
    the family threshold on, the final expression) are only required when
    ``(a, b)`` lies outside the computer-checked base range: there the
    induction has to close.  Raises :class:`CertificateFailure` if a required
    term fails and ``raise_on_failure`` is set.
    """
    kk = k0(family, a, b)
    n = a + b
    inductive = a > family.base_square if family.base_square else n > family.N0
    V = values if values is not None else family.values(n)
    sig = sigma_table(n)
    x = family.x
    Vb = V[b]
    A = family.A

    f = [Fraction(0)] * (a + 1)
    for k in range(1, a + 1):
        f[k] = sig[k] * (Fraction(V[a - k] * Vb, a) - Fraction(V[n - k], n))
    L = -sum((Fraction(sig[k + a] * V[b - k], n) for k in range(1, b + 1)), Fraction(0))
    R1 = f[1]
    r2_terms = f[2:kk]
    R2 = sum(r2_terms, Fraction(0))
    R31 = sum(f[kk : a - A + 1], Fraction(0))
    R32 = sum(f[max(kk, a - A + 1) : a], Fraction(0))
    R33 = f[a]
    R3 = R31 + R32 + R33
    R = R1 + R2 + R3
    pab = V[a] * Vb - V[n]

    led = CertificateLedger(family.name, a, b, kk, inductive)
    T = led.terms.append
    T(_check("identity", x * (L + R), "==", pab, "P_a P_b - P_{a+b}"))
    T(_check("L", L, ">", -b * Vb * (1 + ln(n)), "-b V(b) (1 + ln(a+b))"))
    T(_check("R1", R1, ">", Fraction(b * V[a - 1] * Vb, 2 * a * a), "b/(2a^2) V(a-1) V(b)"))

    strict = all(t > 0 for t in r2_terms)
    r2 = LedgerTerm(
        "R2",
        R2,
        ">" if family.r2_strict else ">=",
        "0 (term by term)",
        RationalInterval.point(min(r2_terms, default=Fraction(0))),
        strict if family.r2_strict else all(t >= 0 for t in r2_terms),
        strict,
    )
    T(r2)

    lna = 1 + ln(a)
    if family.name == "BO":
        r31c = 5 * (V[2] * V[2] - V[8])
        T(_check("R31", R31, ">", r31c * lna, f"{r31c} (1 + ln a)"))
        T(_check("R32", R32, ">", Fraction(-sig[a - 1] * Vb, a), "-sigma(a-1) p(b)/a"))
        T(_check("R32'", R32, ">", -Vb * lna, "-p(b) (1 + ln a)"))
    elif family.name == "X2":
        if b == 1:
            T(_check("R31", R31, ">", Fraction(-sig[a - 1], a), "-sigma(a-1)/a"))
        else:
            T(_check("R31", R31, ">=", 0, "0"))
        T(_check("R32", R32, "==", 0, "0 (empty)"))
    elif family.name == "X18":
        if b == 1:
            v = family.values(4)
            p21, p31 = v[2] * v[1] - v[3], v[3] * v[1] - v[4]
            # the stated intermediate drops the k = a-1 term sigma(a-1) P_{1,1}(x)/a,
            # which is negative at 9/5; the corrected sum is what f_k > sigma(k) P_{a-k,1}/a gives
            stated = (sig[a - 3] * p31 + sig[a - 2] * p21) / a
            p11 = v[1] * v[1] - v[2]
            T(_check("R31*", R31, ">", stated, "(sigma(a-3) P_{3,1} + sigma(a-2) P_{2,1})/a", required=False))
            T(_check("R31**", R31, ">", stated + sig[a - 1] * p11 / a, "... + sigma(a-1) P_{1,1}/a"))
        if b <= 3:
            c = r31_constant_x18()
            T(_check("R31", R31, ">", -c * lna, f"-{c} (1 + ln a)"))
        else:
            T(_check("R31", R31, ">=", 0, "0"))
        T(_check("R32", R32, "==", 0, "0 (empty)"))
    else:
        T(_check("R31", R31, ">=", 0, "0"))
        T(_check("R32", R32, "==", 0, "0 (empty)"))
    T(_check("R33", R33, ">=", 0, "0"))

    rho = r3_weight(family)
    lnn = 1 + ln(n)
    if rho:
        T(_check("R3", R3, ">", -rho * b * Vb * lnn, f"-{rho} b V(b) (1 + ln(a+b))"))
    else:
        T(_check("R3", R3, ">=", 0, "0"))

    C = family.final_constant
    scale = Fraction(b * Vb, 2 * a * a)
    bracket = -C * a * a * lnn + V[a - 1]
    T(_check("L+R", L + R, ">", scale * bracket, "b V(b)/(2a^2) (-C a^2 (1 + ln(a+b)) + V(a-1))"))
    T(_check("bracket", V[a - 1], ">", C * a * a * lnn, "C a^2 (1 + ln(a+b))", required=inductive, claimed=inductive))
    T(_check("binomial", V[a - 1], ">=", binomial_sum(family, a), "sum C(a-2, l-1) x^l / l!"))

    fe = final_expr(family, a)
    led.final = fe.enclose(32)
    led.final_sign = int(sign_of(fe))
    T(
        LedgerTerm(
            "final",
            Fraction(0),
            ">",
            "-C a^2 (1 + ln 2a) + sum C(a-2, l-1) x^l / l!",
            led.final,
            led.final_sign == 1,
            required=inductive and a >= family.threshold,
            claimed=a >= family.threshold,
        )
    )
    if raise_on_failure and not led.passed:
        raise CertificateFailure(led)
    return led
