"""Analysis reports: a key/value tree rendered as indented text or JSON."""

from __future__ import annotations

import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

__all__ = ["decimal_str", "analyze", "verify", "render_text", "render_json", "report_ok"]

SIG_DIGITS = 12


def decimal_str(x) -> str:
    """12 significant digits, round-half-even, from the exact value."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = SIG_DIGITS
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d)


def _num(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return x


def analyze(tv, arr=None, inc=None, field_class=None) -> dict:
    """Invariants and per-arrangement checks for one t-vector.

    ``arr``/``inc`` come from coordinates; without them only the t-vector
    checks run, plus the field ceilings when ``field_class`` is given.
    """
    from .incidence import classify, largest_pencil
    from .invariants import (
        FieldClass,
        NotApplicable,
        c2_lower_bound_check,
        chern,
        face_counts,
        field_ceiling_check,
        field_class_of,
        positivity_check,
        slope_bounds_check,
    )

    ch = chern(tv)
    out: dict = {}
    if arr is not None:
        out["source"] = {"provenance": arr.provenance, "field": repr(arr.field)}
    out["tvector"] = {"d": tv.d, **{f"t{m}": t for m, t in tv.items()}, "points": tv.r}
    out["class"] = classify(tv).value
    out["chern"] = {
        "c1sq": ch.c1sq,
        "c2": ch.c2,
        "slope": _num(ch.slope),
        "h_linear": _num(ch.h_linear),
    }
    checks: dict = {"pair_identity": tv.pair_identity()}

    bounds = slope_bounds_check(tv)
    if bounds.applicable:
        checks["slope_bounds"] = {
            "lower": _num(bounds.lower),
            "lower_ok": bounds.lower_ok,
            "upper_ok": bounds.upper_ok,
            "lower_equality": bounds.lower_equality,
            "upper_equality": bounds.upper_equality,
            "lower_equality_class_ok": bounds.lower_class_ok,
            "upper_equality_class_ok": bounds.upper_class_ok,
        }
        checks["positivity"] = positivity_check(tv)
        m_max = largest_pencil(inc)[0] if inc is not None else tv.max_multiplicity
        checks["c2_lower_bound"] = c2_lower_bound_check(tv, m_max)
    else:
        checks["slope_bounds"] = "n/a"
        checks["positivity"] = "n/a"
        checks["c2_lower_bound"] = "n/a"

    if arr is not None and field_class is None:
        field_class = field_class_of(arr)
    if field_class is not None:
        field_class = FieldClass(field_class)
        try:
            ceil = field_ceiling_check(tv, field_class)
            checks["field_ceiling"] = {"field_class": field_class.value, "ceiling": _num(ceil.ceiling), **ceil.checks}
        except NotApplicable:
            checks["field_ceiling"] = "n/a"
    out["checks"] = checks

    if field_class is FieldClass.REAL:
        faces = face_counts(tv, True)
        out["faces"] = {"f0": faces.f0, "f1": faces.f1, "f2": faces.f2, "simplicial": faces.simplicial}
    return out


def verify(arr, inc=None) -> dict:
    """``analyze`` plus the de Bruijn-Erdos suite and, for planes, field recovery."""
    from .incidence import compute_incidence
    from .theorems import NoZeroDiagonal, TrivialInput, dbe_verify, reconstruct_field, zero_diagonal_permutation

    inc = inc or compute_incidence(arr)
    tv = inc.tvector()
    out = analyze(tv, arr, inc)
    theorems: dict = {}
    try:
        dbe = dbe_verify(inc)
    except TrivialInput:
        theorems["dbe"] = "n/a"
    else:
        theorems["dbe"] = {
            "r": dbe.r,
            "d": dbe.d,
            "inequality_ok": dbe.inequality_ok,
            "equality": dbe.equality or "none",
            "classification_ok": dbe.ok,
        }
        if dbe.q is not None:
            theorems["dbe"]["q"] = dbe.q
        if dbe.r == dbe.d:
            try:
                sigma = zero_diagonal_permutation(inc.matrix())
                theorems["zero_diagonal_permutation"] = {"found": True, "sigma": " ".join(map(str, sigma))}
            except NoZeroDiagonal:
                theorems["zero_diagonal_permutation"] = {"found": False}
        if dbe.equality == "FiniteProjectivePlane":
            rf = reconstruct_field(arr, inc)
            theorems["reconstruct_field"] = {
                "q": rf.q,
                "is_field": rf.is_field,
                "matched_order": rf.matched_order,
                "matches_ambient": rf.matches_ambient,
            }
    out["theorems"] = theorems
    return out


def report_ok(node) -> bool:
    """False when any boolean leaf that names a check is False."""
    if isinstance(node, dict):
        return all(report_ok(v) for k, v in node.items() if k not in _INFORMATIONAL)
    return node is not False


# boolean leaves that describe rather than check
_INFORMATIONAL = {"lower_equality", "upper_equality", "simplicial", "class", "source", "chern", "tvector", "faces"}


def _leaf_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator} ({decimal_str(v)})"
    if v is None:
        return "none"
    return str(v)


def render_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {_leaf_text(v)}")
    return "\n".join(line for line in lines if line)


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, Fraction):
        return {"exact": f"{v.numerator}/{v.denominator}", "decimal": decimal_str(v)}
    return v


def render_json(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2)
