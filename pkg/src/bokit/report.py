"""Report serialization.

JSON output is canonical: sorted keys, two-space indent, and every number
(int or rational) as a decimal string so nothing is lost to floats.
Reports carry no timings or worker counts; equal inputs give equal bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def _row(cells) -> str:
    return "| " + " | ".join(str(c).replace("|", "\\|") for c in cells) + " |"


def md_table(header, rows) -> str:
    lines = [_row(header), "|" + "---|" * len(header)]
    lines += [_row(r) for r in rows]
    return "\n".join(lines) + "\n"


def certify_markdown(result: dict) -> str:
    fam = result["family"]
    out = [f"# Certification: {fam['name']}", ""]
    out.append(
        f"x = {fam['x']}, A = {fam['A']}, B = {fam['B']}, N0 = {fam['N0']}, "
        f"C = {fam['final_constant']}, m = {fam['m']}"
    )
    out.append("")
    rows = [(c["id"], c["claim"], c["expected"], c["observed"], c["status"], c.get("note", "")) for c in result["claims"]]
    out.append(md_table(["id", "claim", "expected", "observed", "status", "note"], rows))
    cl = result["closure"]
    out.append(f"Chain closes: {'yes' if result['proof_closes'] else 'no'} (first inductive a = {cl['first_inductive_a']})")
    if "required_N0" in cl:
        out.append(f"Smallest base range that closes the chain: N0 = {cl['required_N0']}")
    out.append(f"Certified: {'yes' if result['certified'] else 'no'}")
    return "\n".join(out) + "\n"


def theorem_markdown(rep: dict) -> str:
    out = [f"# {rep['which']}: {rep['statement']}", ""]
    out.append(f"range: {', '.join(f'{k}={v}' for k, v in sorted(rep['range'].items()))}")
    out.append(f"checked: {rep['checked']}")
    out.append(f"exceptions found: {_fmt_set(rep['exceptions'])}")
    out.append(f"exceptions stated: {_fmt_set(rep['expected'])}")
    for k, v in sorted(rep["notes"].items()):
        out.append(f"{k}: {v}")
    out.append(f"matches: {'yes' if rep['matches'] else 'no'}")
    return "\n".join(out) + "\n"


def _fmt_set(items) -> str:
    return "{" + ", ".join("(" + ", ".join(str(c) for c in e) + ")" for e in items) + "}"
