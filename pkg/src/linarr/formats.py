"""Arrangement text files.

::

    # comment
    field Q | field GF <p> <k> | field CYCLO <m>
    line <a> <b> <c>

Element syntax follows the field: ``n`` or ``n/d`` over Q, ``[c0,...]`` over
GF(p, k) and Q(zeta_m).  Lines are stored normalized, so serializing a parsed
file is a fixed point.
"""

from __future__ import annotations

import re

from .exactfield import BadFieldElement, parse_field
from .incidence import Arrangement, DuplicateLine
from .projgeom import GeometryError, ProjLine

__all__ = ["FormatSyntaxError", "parse_arrangement", "serialize_arrangement", "read_arrangement"]


class FormatSyntaxError(ValueError):
    def __init__(self, message: str, lineno: int, col: int):
        super().__init__(f"line {lineno}, column {col}: {message}")
        self.lineno = lineno
        self.col = col


_TOKEN = re.compile(r"\[[^\]]*\]|[^\s\[\]]+|\[")


def _tokens(text: str):
    for m in _TOKEN.finditer(text):
        yield m.group(0), m.start() + 1


def parse_arrangement(text: str, provenance: str = "file") -> Arrangement:
    field = None
    lines: list[ProjLine] = []
    where: dict[bytes, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = list(_tokens(body))
        if not toks:
            continue
        head, col = toks[0]
        if field is None:
            if head != "field":
                raise FormatSyntaxError("expected a 'field' declaration first", lineno, col)
            try:
                field = parse_field([t for t, _ in toks[1:]])
            except ValueError as exc:
                raise FormatSyntaxError(str(exc), lineno, toks[1][1] if len(toks) > 1 else col) from None
            continue
        if head == "field":
            raise FormatSyntaxError("duplicate field declaration", lineno, col)
        if head != "line":
            raise FormatSyntaxError(f"unknown record {head!r}", lineno, col)
        if len(toks) != 4:
            raise FormatSyntaxError(f"'line' takes 3 coefficients, got {len(toks) - 1}", lineno, col)
        coeffs = []
        for tok, c in toks[1:]:
            try:
                coeffs.append(field.parse(tok))
            except BadFieldElement as exc:
                raise BadFieldElement(f"line {lineno}, column {c}: {exc}") from None
        try:
            l = ProjLine(coeffs)
        except GeometryError:
            raise FormatSyntaxError("line coefficients are all zero", lineno, col) from None
        if l.key in where:
            raise DuplicateLine(f"line {lineno} repeats the line on line {where[l.key]}: {l!r}")
        where[l.key] = lineno
        lines.append(l)
    if field is None:
        raise FormatSyntaxError("missing 'field' declaration", 1, 1)
    return Arrangement(field, tuple(lines), provenance)


def serialize_arrangement(arr: Arrangement) -> str:
    fmt = arr.field.format
    out = [arr.field.header()]
    for l in arr.lines:
        out.append("line " + " ".join(fmt(c) for c in l.coords))
    return "\n".join(out) + "\n"


def read_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read(), provenance=str(path))
