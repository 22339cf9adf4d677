"""Density sweeps, slope series and c2 growth tables.

Large parameters go through closed-form t-vectors only; the augmentation
formula is exact, so no coordinates are needed to follow a slope to its
limit.  Small parameters can additionally be cross-checked against the
coordinate generators.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, TextIO

from .families import (
    FamilySpec,
    augment_general,
    expected_tvector,
    generate_with_incidence,
    pencil_plus_fixed_tvector,
)
from .exactfield import prime_factors
from .incidence import TVector
from .invariants import c1sq, c2, h_linear, slope
from .report import decimal_str

__all__ = [
    "SweepRow",
    "FAMILY_LIMITS",
    "limit_function",
    "added_lines",
    "density_sweep",
    "slope_series",
    "c2_growth_report",
    "right_triangle_closed_form",
    "write_sweep_csv",
    "CSV_HEADER",
]

# (a, c, h): a = lim c1^2 / l^h, c = limiting slope of the base family
FAMILY_LIMITS = {
    "pg": (Fraction(3), Fraction(3), Fraction(3, 2)),
    "polygon": (Fraction(5, 8), Fraction(5, 2), Fraction(2)),
}

# coordinate cross-checks are only run up to these parameters
_COORD_LIMITS = {"pg": 9, "polygon": 8, "right-triangle": 8, "pencil-plus": 60}

CSV_HEADER = ["param", "l", "d_add", "slope_num", "slope_den", "slope_dec", "target_dec", "gap_dec", "h_l_dec"]


@dataclass(frozen=True)
class SweepRow:
    param: int
    l: int
    d_add: int
    slope: Fraction
    target: Fraction
    gap: Fraction
    h_l: Fraction

    def csv_fields(self) -> list[str]:
        return [
            str(self.param),
            str(self.l),
            str(self.d_add),
            str(self.slope.numerator),
            str(self.slope.denominator),
            decimal_str(self.slope),
            decimal_str(self.target),
            decimal_str(self.gap),
            decimal_str(self.h_l),
        ]


def limit_function(a, c, h, x) -> Fraction:
    """Limit slope after adding floor(x * l^(h-1)) general lines.

    f(x) = (a + 2x) / (a/c + x) for h < 2 and
    g(x) = (a + 2x + x^2) / (a/c + x + x^2/2) for h = 2.
    """
    a, c, h, x = Fraction(a), Fraction(c), Fraction(h), Fraction(x)
    if not (a > 0 and c > 2 and x >= 0):
        raise ValueError("limit_function needs a > 0, c > 2, x >= 0")
    if h < 2:
        return (a + 2 * x) / (a / c + x)
    if h == 2:
        return (a + 2 * x + x * x) / (a / c + x + x * x / 2)
    raise ValueError("h must lie in ]1, 2]")


def added_lines(x, l: int, h) -> int:
    """floor(x * l^(h-1)) in exact integer arithmetic, h in {3/2, 2}."""
    x, h = Fraction(x), Fraction(h)
    if x < 0:
        raise ValueError("x must be non-negative")
    if h == 2:
        return (x.numerator * l) // x.denominator
    if h == Fraction(3, 2):
        # floor(sqrt(u^2 l) / v) == floor(isqrt(u^2 l) / v)
        return isqrt(x.numerator**2 * l) // x.denominator
    raise ValueError("only h = 3/2 and h = 2 have an exact floor")


def _base_tvector(family: str, param: int) -> TVector:
    if family == "pg":
        return _pg_tvector(param)
    if family == "polygon":
        return expected_tvector(FamilySpec("polygon", (param,)))
    raise ValueError(f"no density sweep for family {family!r}")


def _coord_check(spec: FamilySpec, tv: TVector):
    _, inc = generate_with_incidence(spec)
    if inc.tvector() != tv:
        raise AssertionError(f"{spec}: coordinates disagree with the closed form")


def density_sweep(family: str, h, x, params: Iterable[int], *, p: int = 2, verify_coords: bool = True) -> list[SweepRow]:
    """Slopes of base arrangements plus floor(x l^(h-1)) general lines.

    For ``family == "pg"`` the parameters are exponents e, with q = p**e.
    For ``"polygon"`` they are the number of sides n.
    """
    if family not in FAMILY_LIMITS:
        raise ValueError(f"no density sweep for family {family!r}")
    a, c, _ = FAMILY_LIMITS[family]
    target = limit_function(a, c, h, x)
    rows = []
    for param in sorted(params):
        if family == "pg":
            q = p**param
            tv = _base_tvector("pg", q)
            if verify_coords and q <= _COORD_LIMITS["pg"]:
                _coord_check(FamilySpec("pg", (p, param)), tv)
            label = q
        else:
            if param < 3:
                raise ValueError("polygon needs n >= 3")
            tv = _base_tvector("polygon", param)
            if verify_coords and param <= _COORD_LIMITS["polygon"]:
                _coord_check(FamilySpec("polygon", (param,)), tv)
            label = param
        l = tv.d
        d_add = added_lines(x, l, h)
        aug = augment_general(tv, d_add)
        s = slope(aug)
        rows.append(SweepRow(label, l, d_add, s, target, abs(s - target), h_linear(aug)))
    return rows


def augmented_slope(base: TVector, d_add: int) -> Fraction:
    """Slope after adding d_add general lines, from the base Chern numbers only.

    The c2 denominator is doubled to clear the halves.
    """
    l = base.d
    num = c1sq(base) + 2 * l * d_add + d_add * d_add - 6 * d_add
    den2 = 2 * c2(base) + 2 * l * d_add + d_add * d_add - 5 * d_add
    return Fraction(2 * num, den2)


def right_triangle_closed_form(n: int) -> Fraction:
    return Fraction(38 * n * n - 18 * n - 7, 16 * n * n - 8 * n - 2)


def _pg_tvector(q: int) -> TVector:
    return TVector(q * q + q + 1, {q + 1: q * q + q + 1})


def _pg_spec(q: int) -> FamilySpec:
    r = prime_factors(q)
    if len(r) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, e = r[0], 0
    while p**e < q:
        e += 1
    return FamilySpec("pg", (p, e))


def _series_spec(family: str, param: int, k: int) -> FamilySpec:
    if family == "pg":
        return _pg_spec(param)
    if family == "pencil-plus":
        return FamilySpec("pencil-plus", (param, k))
    if family in ("right-triangle", "general", "polygon", "ceva", "near-pencil"):
        return FamilySpec(family, (param,))
    raise ValueError(f"no slope series for family {family!r}")


def slope_series(
    family: str, params: Sequence[int], *, k: int = 3, coords: bool | None = None
) -> list[tuple[int, Fraction, Fraction]]:
    """(param, slope, H_L) rows.

    ``coords=None`` uses coordinates for parameters within the cross-check
    limit and closed forms beyond it.  For ``pg`` the parameter is q.
    Right-triangle slopes are asserted equal to their closed form.
    """
    rows = []
    for param in params:
        spec = _series_spec(family, param, k)
        use = coords if coords is not None else param <= _COORD_LIMITS.get(family, 0)
        tv = expected_tvector(spec)
        if use:
            _coord_check(spec, tv)
        s = slope(tv)
        if family == "right-triangle" and s != right_triangle_closed_form(param):
            raise AssertionError(f"right-triangle({param}): slope {s} != closed form")
        rows.append((param, s, h_linear(tv)))
    return rows


@dataclass(frozen=True)
class GrowthRow:
    param: int
    d: int
    c2: int
    ratio: Fraction
    m_max: int
    bound_ok: bool


@dataclass(frozen=True)
class GrowthReport:
    family: str
    rows: tuple[GrowthRow, ...]
    c2_increasing: bool
    ratio_increasing: bool
    bounds_ok: bool
    asymptotically_trivial: bool

    @property
    def ok(self) -> bool:
        if self.asymptotically_trivial:
            return self.bounds_ok
        return self.c2_increasing and self.ratio_increasing and self.bounds_ok


def c2_growth_report(family: str, params: Sequence[int], *, k: int = 3) -> GrowthReport:
    """c2 and c2/d along a family, with the (m_max - 2)(d - m_max - 1) floor.

    ``pencil-plus`` is the asymptotically trivial proxy: its c2/d stays
    bounded, so only the floor is asserted there.
    """
    rows = []
    for param in params:
        if family == "pg":
            tv = _pg_tvector(param)
        elif family == "pencil-plus":
            tv = pencil_plus_fixed_tvector(param, k)
        else:
            tv = expected_tvector(_series_spec(family, param, k))
        m = tv.max_multiplicity
        val = c2(tv)
        rows.append(GrowthRow(param, tv.d, val, Fraction(val, tv.d), m, val >= (m - 2) * (tv.d - m - 1)))
    inc_c2 = all(a.c2 < b.c2 for a, b in zip(rows, rows[1:]))
    inc_ratio = all(a.ratio < b.ratio for a, b in zip(rows, rows[1:]))
    return GrowthReport(
        family,
        tuple(rows),
        inc_c2,
        inc_ratio,
        all(r.bound_ok for r in rows),
        asymptotically_trivial=family == "pencil-plus",
    )


def write_sweep_csv(rows: Iterable[SweepRow], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
