"""Command-line entry point.

Exit status: 0 on success, 1 when a verified statement fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import experiments
from .exactfield import BadFieldElement, parse_field
from .families import FAMILIES, FamilySpec, generate_with_incidence
from .formats import FormatSyntaxError, parse_arrangement, serialize_arrangement
from .incidence import ArrangementError, TVector, compute_incidence
from .report import analyze, decimal_str, render_json, render_text, report_ok, verify
from .theorems import NoZeroDiagonal, NotProjectivePlane, parse_matrix, reconstruct_field, zero_diagonal_permutation


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``a..b`` (inclusive), ``a..b:step`` or ``a,b,c``."""
    try:
        if ".." in text:
            span, _, step = text.partition(":")
            lo, hi = span.split("..")
            return list(range(int(lo), int(hi) + 1, int(step) if step else 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(report: dict, as_json: bool) -> None:
    print(render_json(report) if as_json else render_text(report))


def cmd_gen(args) -> int:
    field = parse_field(args.field.split()) if args.field else None
    spec = FamilySpec(args.family, tuple(args.params), field)
    arr, _ = generate_with_incidence(spec)
    text = serialize_arrangement(arr)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    if args.tvec:
        if args.file:
            raise UsageError("give either a file or --tvec, not both")
        try:
            tv = TVector.parse(args.tvec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        report = analyze(tv, field_class=args.field_class)
    else:
        if not args.file:
            raise UsageError("analyze needs a file or --tvec")
        arr = parse_arrangement(_read(args.file), provenance=args.file)
        inc = compute_incidence(arr)
        report = analyze(inc.tvector(), arr, inc, field_class=args.field_class)
    _emit(report, args.json)
    return 0 if report_ok(report) else 1


def cmd_verify(args) -> int:
    arr = parse_arrangement(_read(args.file), provenance=args.file)
    report = verify(arr)
    _emit(report, args.json)
    return 0 if report_ok(report) else 1


def cmd_reconstruct(args) -> int:
    arr = parse_arrangement(_read(args.file), provenance=args.file)
    try:
        rf = reconstruct_field(arr)
    except NotProjectivePlane as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    labels = rf.labels()
    report = {
        "q": rf.q,
        "is_field": rf.is_field,
        "matched_order": rf.matched_order,
        "matches_ambient": rf.matches_ambient,
        "elements": " ".join(labels),
        "add": {labels[i]: " ".join(labels[j] for j in row) for i, row in enumerate(rf.add_table)},
        "mul": {labels[i]: " ".join(labels[j] for j in row) for i, row in enumerate(rf.mul_table)},
    }
    _emit(report, args.json)
    return 0 if (rf.is_field and rf.matched_order) else 1


def cmd_matrix_perm(args) -> int:
    try:
        m = parse_matrix(_read(args.file))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(m) != len(m[0]):
        raise UsageError("matrix-perm needs a square matrix")
    try:
        sigma = zero_diagonal_permutation(m)
    except NoZeroDiagonal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit({"size": len(m), "sigma": " ".join(map(str, sigma))}, args.json)
    return 0


def cmd_sweep(args) -> int:
    if args.q_exp and args.range:
        raise UsageError("give --range or --q-exp, not both")
    text = args.q_exp or args.range
    if not text:
        raise UsageError("sweep needs --range (or --q-exp for pg)")
    params = parse_range(text)
    family = args.family
    if args.h is None:
        args.h = experiments.FAMILY_LIMITS[family][2] if family in experiments.FAMILY_LIMITS else None
    try:
        rows = experiments.density_sweep(family, args.h, args.x, params, p=args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            experiments.write_sweep_csv(rows, fh)
    else:
        experiments.write_sweep_csv(rows, sys.stdout)
    shrinking = len(rows) < 2 or rows[-1].gap < rows[0].gap
    if not shrinking:
        print("warning: gap did not shrink across the range", file=sys.stderr)
    return 0 if shrinking else 1


def cmd_series(args) -> int:
    params = parse_range(args.range)
    try:
        rows = experiments.slope_series(args.family, params, k=args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("param,slope_num,slope_den,slope_dec,h_l_dec")
    for param, s, h in rows:
        print(f"{param},{s.numerator},{s.denominator},{decimal_str(s)},{decimal_str(h)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linarr", description="Exact line arrangements and their Chern slopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named arrangement family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--field", help="field override, e.g. 'GF 7 1' or 'CYCLO 12'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="t-vector, Chern numbers and checks")
    p.add_argument("file", nargs="?")
    p.add_argument("--tvec", help='inline t-vector, e.g. "d=9;t3=12"')
    p.add_argument("--field-class", choices=["RealEmbeddable", "ComplexOnly", "PositiveChar"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="full theorem suite for one arrangement")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="density sweep (CSV)")
    p.add_argument("family", choices=sorted(experiments.FAMILY_LIMITS))
    p.add_argument("--h", type=_rational)
    p.add_argument("--x", type=_rational, default=Fraction(1))
    p.add_argument("--range", help="parameters: a..b, a..b:step or a,b,c")
    p.add_argument("--q-exp", help="pg only: exponents e with q = p^e")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("series", help="exact slope / H_L series along a family (CSV)")
    p.add_argument("family", choices=["right-triangle", "pg", "pencil-plus", "general", "polygon", "ceva"])
    p.add_argument("--range", required=True)
    p.add_argument("--k", type=int, default=3, help="extra lines for pencil-plus")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("reconstruct-field", help="recover the field of a finite projective plane")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("matrix-perm", help="zero-diagonal row permutation of a 0/1 matrix")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matrix_perm)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatSyntaxError, BadFieldElement, ArrangementError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
