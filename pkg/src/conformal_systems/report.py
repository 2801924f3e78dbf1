"""JSON and text rendering of solver reports.

Rationals are serialized as strings ``"p/q"`` (or ``"p"``) so they survive
the round trip exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .invariance import SpecialValueReport
from .parabolic import Submodule
from .polys import format_rational
from .rootsys import AlgebraType


def _q(x) -> str | None:
    return None if x is None else format_rational(x)


def _unq(x) -> Fraction | None:
    return None if x is None else Fraction(x)


def report_to_dict(r: SpecialValueReport) -> dict[str, Any]:
    d: dict[str, Any] = {}
    if r.submodule is not None:
        d["roots"] = [list(x) for x in r.submodule.roots]
        d["highest_weight"] = list(r.submodule.highest_weight)
    if r.component is not None:
        d["component"] = [i + 1 for i in r.component]
    d["s_character"] = _q(r.s_character)
    d["solutions"] = [{"s": _q(s), "t": _q(t)} for s, t in r.solutions]
    d["status"] = r.status
    d["equation_count"] = r.equation_count
    if r.notes:
        d["notes"] = list(r.notes)
    return d


def report_from_dict(d: dict[str, Any], algebra: AlgebraType | str) -> SpecialValueReport:
    if isinstance(algebra, str):
        algebra = AlgebraType.parse(algebra)
    sub = None
    if "roots" in d:
        sub = Submodule(tuple(tuple(x) for x in d["roots"]), tuple(d["highest_weight"]))
    comp = tuple(i - 1 for i in d["component"]) if "component" in d else None
    return SpecialValueReport(
        algebra=algebra,
        submodule=sub,
        s_character=_unq(d.get("s_character")),
        solutions=[(_unq(x["s"]), _unq(x["t"])) for x in d["solutions"]],
        equation_count=int(d["equation_count"]),
        status=d["status"],
        component=comp,
        notes=list(d.get("notes", [])),
    )


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2)


def root_label(root) -> str:
    """Compact label: -a1-a2 style over simple roots."""
    parts = []
    for i, c in enumerate(root):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}a{i + 1}")
    text = "".join(parts) or "0"
    return text[1:] if text.startswith("+") else text


def report_text(r: SpecialValueReport) -> str:
    lines = []
    if r.submodule is not None:
        roots = ", ".join(root_label(x) for x in r.submodule.roots)
        lines.append(f"submodule {{{roots}}}  highest weight {root_label(r.submodule.highest_weight)}")
        lines.append(f"  s from character equation: {_q(r.s_character)}")
    if r.component is not None:
        lines.append(f"component {{{', '.join(f'a{i + 1}' for i in r.component)}}}")
    lines.append(f"  equations: {r.equation_count}   status: {r.status}")
    for s, t in r.solutions:
        lines.append(f"  solution: s = {_q(s)}" + (f", t = {_q(t)}" if t is not None else ""))
    for n in r.notes:
        lines.append(f"  note: {n}")
    return "\n".join(lines)
