"""Full certification run for one proof family.

Every stated fact the proof relies on becomes a claim with status
``confirmed`` or ``discrepancy``; the run is certified iff all are confirmed.
Separately ``proof_closes`` says whether the chain closes with the values
actually computed, which can hold even when a stated intermediate does not.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .. import reference
from ..darcais import bo_poly, darcais_values
from ..exactnum import Sign, ln, sign_of
from ..roots import is_increasing_on
from .families import ProofFamily, derived_constant, get_family, r3_weight, r31_constant_x18
from .ledger import replay_step
from .sweeps import base_case_sweep
from .thresholds import early_expr, early_threshold_scan, tail_certificate, threshold_scan

DEFAULT_AMAX = {"BO": 10**4, "X3": 1000, "X2": 1000, "X18": 1000}


def _claim(cid: str, text: str, expected, observed, ok: bool, note: str = "") -> dict:
    d = {
        "id": cid,
        "claim": text,
        "expected": str(expected),
        "observed": str(observed),
        "status": "confirmed" if ok else "discrepancy",
    }
    if note:
        d["note"] = note
    return d


def first_inductive_a(family: ProofFamily, N0: int | None = None) -> int:
    """Smallest a that occurs in an induction step (b <= a)."""
    if family.base_square:
        return family.base_square + 1
    return ceil(((N0 if N0 is not None else family.N0) + 1) / 2)


def replay_samples(family: ProofFamily) -> list[tuple[int, int]]:
    if family.base_square:
        T = family.base_square + 1
        pts = [(T, 1), (T, 2), (T, T - 1), (T, T)]
    else:
        n1, A = family.N0 + 1, family.A
        pts = [(n1 - A, A), (n1 - A - 1, A + 1), ((n1 + 1) // 2, n1 // 2), ((n1 + 2) // 2, (n1 + 1) // 2)]
    return sorted({p for p in pts if family.A <= p[1] <= p[0]})


def _closure(family: ProofFamily, minimal: int | None, a_max: int) -> dict:
    """Does every inductive step close?  For a below the final threshold the
    bracket with the exact P_{a-1}(x) is used (it dominates the final form)."""
    start = first_inductive_a(family)
    if minimal is None:
        return {"first_inductive_a": start, "closes": False, "reason": "final expression not positive up to a_max"}
    v = family.values(max(minimal, start))
    failing = [a for a in range(start, minimal) if sign_of(early_expr(family, a, v)) != Sign.POSITIVE]
    out = {"first_inductive_a": start, "final_from": minimal, "bracket_failures": failing, "closes": not failing}
    if failing:
        a_close = failing[-1] + 1
        out["closing_a"] = a_close
        if not family.base_square:
            out["required_N0"] = 2 * a_close - 2
        else:
            out["required_base_square"] = a_close - 1
    return out


def _constants(family: ProofFamily) -> list[dict]:
    out = []
    rho, C = r3_weight(family), family.final_constant
    out.append(
        _claim(
            "constant",
            "final constant equals 2 (1 + rho) from the L and R3 bounds",
            C,
            derived_constant(family),
            derived_constant(family) == C,
            f"rho = {rho}",
        )
    )
    if family.name == "BO":
        v = family.values(8)
        r31 = 5 * (v[2] ** 2 - v[8])
        out.append(_claim("R31-constant", "5 (p(2)^2 - p(8)) = -90", -90, r31, r31 == -90))
    elif family.name == "X3":
        p8 = darcais_values(3, 8)[8]
        out.append(_claim("P8(3)", "P_8(3) = 810", reference.P8_AT_3, p8, p8 == reference.P8_AT_3))
        s = sign_of(800 - 200 * (1 + ln(20)))
        out.append(_claim("200(1+ln20)", "200 (1 + ln 20) < 800", "positive margin", s.name, s == Sign.POSITIVE))
    elif family.name == "X2":
        v = family.values(2)
        d = v[1] ** 2 - v[2]
        out.append(_claim("P1^2-P2", "P_1(2)^2 - P_2(2) = -1", -1, d, d == -1))
    elif family.name == "X18":
        p15 = darcais_values(family.x, 15)[15]
        bound = reference.P15_AT_9_5_LOWER
        out.append(_claim("P15(9/5)", f"P_15(9/5) > {bound}", f"> {bound}", p15, p15 > bound))
        s = sign_of(bound - 450 * (1 + ln(30)))
        out.append(_claim("450(1+ln30)", f"450 (1 + ln 30) < {bound}", "positive margin", s.name, s == Sign.POSITIVE))
        c = r31_constant_x18()
        out.append(
            _claim(
                "R31-constant",
                "-(P_{2,1}(9/5) + P_{3,1}(9/5)) <= 1.5648",
                reference.R31_CONSTANT_X18,
                c,
                c <= reference.R31_CONSTANT_X18,
                "equal" if c == reference.R31_CONSTANT_X18 else "",
            )
        )
        for a, b in ((2, 1), (3, 1)):
            ok = is_increasing_on(bo_poly(a, b), family.x)
            out.append(_claim(f"P{a}{b}-increasing", f"P_{{{a},{b}}} increasing on [9/5, oo)", True, ok, ok))
    return out


def certify_family(name: str, amax: int | None = None, tail: bool = False, workers: int = 1) -> dict:
    family = get_family(name)
    amax = amax if amax is not None else DEFAULT_AMAX[family.name]
    claims = _constants(family)

    base = base_case_sweep(family, workers)
    claims.append(_claim("base", base.details["range"], base.expected, base.exceptions, base.passed))
    if "table2_match" in base.details:
        ok = base.details["table2_match"]
        claims.append(_claim("table2", "P_ab(2), a, b <= 4, equals the printed table", True, ok, ok))

    scan = threshold_scan(family, amax)
    ok = scan.confirmed and scan.sign_at_stated_minus_one == -1
    claims.append(
        _claim(
            "threshold",
            f"final expression positive for all a >= {family.threshold}",
            family.threshold,
            scan.minimal,
            ok,
            f"scanned 2 <= a <= {amax}",
        )
    )
    report: dict = {"threshold": scan.as_dict()}

    if family.early_threshold is not None:
        early = early_threshold_scan(family, max(amax, family.threshold))
        covered = first_inductive_a(family) > max(family.early_threshold, early.minimal or 0)
        claims.append(
            _claim(
                "early-threshold",
                f"bracket with the exact P_(a-1)(x) positive for all a >= {family.early_threshold}",
                family.early_threshold,
                early.minimal,
                early.confirmed,
                "no effect on the proof: the base range covers these a" if covered and not early.confirmed else "",
            )
        )
        report["early_threshold"] = early.as_dict()

    replays, strict_r2 = [], []
    for a, b in replay_samples(family):
        led = replay_step(family, a, b, raise_on_failure=False)
        replays.append(led.as_dict())
        claims.append(
            _claim(
                f"replay({a},{b})",
                "every bound of the induction step holds",
                "all pass",
                ", ".join(t.name for t in led.failed()) or "all pass",
                led.passed,
            )
        )
        for t in led.discrepancies():
            claims.append(_claim(f"replay({a},{b}):{t.name}", f"{t.name} > {t.bound}", "holds", "fails", False))
        strict_r2.append(led.term("R2").strict)
    report["replay"] = replays
    report["r2_strict_at_samples"] = strict_r2

    closure = _closure(family, scan.minimal, amax)
    if tail and scan.minimal is not None:
        start = max(scan.minimal, family.threshold)
        cert = tail_certificate(family, start)
        closure["tail"] = cert.as_dict()
        closure["closes"] = closure["closes"] and cert.verdict
        closure["final_positive_for_all_a_from"] = scan.minimal if cert.verdict else None
        stated = cert if start == family.threshold else tail_certificate(family, family.threshold)
        claims.append(
            _claim(
                "tail",
                f"final expression positive for every a >= {family.threshold}",
                True,
                stated.verdict,
                stated.verdict,
                f"witness a = {stated.witness}" if not stated.verdict else "",
            )
        )
        report["tail"] = stated.as_dict()
    else:
        closure["scope"] = f"a <= {amax}"
    closure_ok = closure["closes"]
    note = ""
    if "required_N0" in closure:
        note = f"chain needs N0 = {closure['required_N0']}"
    elif "required_base_square" in closure:
        note = f"chain needs a base square of side {closure['required_base_square']}"
    claims.append(
        _claim(
            "closure",
            f"every induction step with a >= {closure['first_inductive_a']} closes",
            True,
            closure_ok,
            closure_ok,
            note,
        )
    )
    report["closure"] = closure

    return {
        "family": {
            "name": family.name,
            "A": family.A,
            "B": family.B,
            "N0": family.N0,
            "x": str(family.x),
            "final_constant": str(family.final_constant),
            "m": family.m,
            "threshold": family.threshold,
            "early_threshold": family.early_threshold,
            "base_square": family.base_square,
        },
        "amax": amax,
        "tail": tail,
        "claims": claims,
        "base": base.as_dict(),
        **report,
        "certified": all(c["status"] == "confirmed" for c in claims),
        "proof_closes": closure_ok,
    }


def exit_code(result: dict) -> int:
    return 0 if result["certified"] else 1
