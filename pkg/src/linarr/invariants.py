"""Chern numbers, slopes, linear H-constants and the per-arrangement checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exactfield import is_real
from .incidence import Arrangement, TVector

__all__ = [
    "NotApplicable",
    "EmptyPointSet",
    "NotReal",
    "FieldClass",
    "ChernInvariants",
    "FaceData",
    "SlopeBoundsReport",
    "CeilingReport",
    "chern",
    "c1sq",
    "c2",
    "slope",
    "slope_bounds_check",
    "positivity_check",
    "h_linear",
    "c2_lower_bound_check",
    "face_counts",
    "field_class_of",
    "field_ceiling_check",
    "DUAL_HESSE",
]


class NotApplicable(ValueError):
    """The t-vector violates a proposition's hypothesis (t_d = t_{d-1} = 0)."""


class EmptyPointSet(ValueError):
    pass


class NotReal(ValueError):
    pass


DUAL_HESSE = TVector(9, {3: 12})


def c1sq(tv: TVector) -> int:
    return 9 - 5 * tv.d + sum((3 * m - 4) * t for m, t in tv.items())


def c2(tv: TVector) -> int:
    return 3 - 2 * tv.d + sum((m - 1) * t for m, t in tv.items())


def slope(tv: TVector) -> Fraction | None:
    den = c2(tv)
    return Fraction(c1sq(tv), den) if den else None


@dataclass(frozen=True)
class ChernInvariants:
    d: int
    c1sq: int
    c2: int
    slope: Fraction | None
    h_linear: Fraction | None


def chern(tv: TVector) -> ChernInvariants:
    a, b = c1sq(tv), c2(tv)
    return ChernInvariants(
        d=tv.d,
        c1sq=a,
        c2=b,
        slope=Fraction(a, b) if b else None,
        h_linear=h_linear(tv) if tv.r else None,
    )


def _applicable(tv: TVector) -> bool:
    return tv.t(tv.d) == 0 and tv.t(tv.d - 1) == 0


def h_linear(tv: TVector) -> Fraction:
    """(d^2 - sum m^2 t_m) / sum t_m, cross-checked against the Chern form.

    The two expressions coincide through the pair identity, so the
    cross-check is skipped for vectors that violate it.
    """
    r = tv.r
    if r == 0:
        raise EmptyPointSet("H_L is undefined without points")
    direct = Fraction(tv.d**2 - tv.moment(2), r)
    if not tv.pair_identity():
        return direct
    a, b = c1sq(tv), c2(tv)
    via_chern = Fraction(3 - (a - 2 * b), tv.d - (a - 3 * b)) - 2
    if direct != via_chern:
        raise AssertionError(f"H_L formulas disagree on {tv}: {direct} != {via_chern}")
    return direct


@dataclass(frozen=True)
class SlopeBoundsReport:
    applicable: bool
    slope: Fraction | None = None
    lower: Fraction | None = None
    lower_ok: bool = False
    upper_ok: bool = False
    lower_equality: bool = False
    upper_equality: bool = False
    # equality holds exactly on the characterized class
    lower_class_ok: bool = False
    upper_class_ok: bool = False

    @property
    def ok(self) -> bool:
        if not self.applicable:
            return True
        return self.lower_ok and self.upper_ok and self.lower_class_ok and self.upper_class_ok


def slope_bounds_check(tv: TVector) -> SlopeBoundsReport:
    if not _applicable(tv):
        return SlopeBoundsReport(applicable=False)
    d = tv.d
    s = slope(tv)
    lower = Fraction(2 * d - 6, d - 2)
    only_nodes = tv.t(2) == comb(d, 2)
    r_equals_d = tv.r == d
    return SlopeBoundsReport(
        applicable=True,
        slope=s,
        lower=lower,
        lower_ok=lower <= s,
        upper_ok=s <= 3,
        lower_equality=s == lower,
        upper_equality=s == 3,
        lower_class_ok=(s == lower) == only_nodes,
        upper_class_ok=(s == 3) == r_equals_d,
    )


def positivity_check(tv: TVector) -> bool:
    if not _applicable(tv):
        raise NotApplicable(f"positivity needs t_d = t_(d-1) = 0, got {tv}")
    return c1sq(tv) > 0 and c2(tv) > 0


def c2_lower_bound_check(tv: TVector, m_max: int) -> bool:
    if not _applicable(tv):
        raise NotApplicable(f"c2 bound needs a non-(quasi-)trivial arrangement, got {tv}")
    return c2(tv) >= (m_max - 2) * (tv.d - m_max - 1)


@dataclass(frozen=True)
class FaceData:
    f0: int
    f1: int
    f2: int
    simplicial: bool


def face_counts(tv: TVector, realizable_over_reals: bool) -> FaceData:
    """Vertex, edge and face counts of the cell decomposition of RP^2."""
    if not realizable_over_reals:
        raise NotReal("face counts need a real arrangement")
    f0 = tv.r
    f1 = tv.moment(1)
    f2 = 1 - f0 + f1
    if 5 * c2(tv) - 2 * c1sq(tv) != 2 * f1 - 3 * f2:
        raise AssertionError(f"Euler identity fails on {tv}")
    return FaceData(f0, f1, f2, simplicial=3 * f2 == 2 * f1)


class FieldClass(str, enum.Enum):
    REAL = "RealEmbeddable"
    COMPLEX = "ComplexOnly"
    POSITIVE_CHAR = "PositiveChar"


def field_class_of(arr: Arrangement) -> FieldClass:
    if arr.field.characteristic:
        return FieldClass.POSITIVE_CHAR
    if all(is_real(c) for l in arr.lines for c in l.coords):
        return FieldClass.REAL
    return FieldClass.COMPLEX


@dataclass(frozen=True)
class CeilingReport:
    field_class: FieldClass
    applicable: bool
    slope: Fraction | None = None
    ceiling: Fraction | None = None
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def violations(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def field_ceiling_check(tv: TVector, field_class: FieldClass | str) -> CeilingReport:
    """Field-specific ceilings on the slope; violations are findings, not exceptions."""
    field_class = FieldClass(field_class)
    if not _applicable(tv):
        raise NotApplicable(f"ceilings need t_d = t_(d-1) = 0, got {tv}")
    s = slope(tv)
    checks: dict[str, bool] = {"slope<=3": s <= 3}
    if field_class is FieldClass.POSITIVE_CHAR:
        ceiling = Fraction(3)
    else:
        # every characteristic-0 arrangement here embeds in the complex plane
        checks["slope<=8/3"] = s <= Fraction(8, 3)
        checks["8/3 equality iff dual Hesse"] = (s == Fraction(8, 3)) == (tv == DUAL_HESSE)
        checks["H_L>=-4"] = h_linear(tv) >= -4
        ceiling = Fraction(8, 3)
        if field_class is FieldClass.REAL:
            faces = face_counts(tv, True)
            checks["slope<=5/2"] = s <= Fraction(5, 2)
            checks["5/2 equality iff simplicial"] = (s == Fraction(5, 2)) == faces.simplicial
            ceiling = Fraction(5, 2)
    return CeilingReport(field_class, True, s, ceiling, checks)
