"""Generators for the named arrangement families and their closed-form t-vectors.

Every generator recomputes the incidence structure of what it built and
refuses to return an arrangement whose t-vector disagrees with the closed
form (``GeneratorMismatch``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from math import comb

from .exactfield import (
    QQ,
    CyclotomicField,
    FiniteField,
    NoSuchRoot,
    cyclotomic_field,
    finite_field,
    is_prime,
)
from .incidence import Arrangement, IncidenceStructure, TVector, compute_incidence
from .projgeom import ProjLine, incident, join, line, meet, point

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "ParameterOutOfRange",
    "UnsupportedField",
    "GeneratorMismatch",
    "generate",
    "generate_with_incidence",
    "expected_tvector",
    "augment_general",
    "augment_coords",
    "pencil_plus_fixed",
    "pencil_plus_fixed_tvector",
    "hesse_points",
]

FAMILIES = (
    "pencil",
    "near-pencil",
    "general",
    "quadrilateral",
    "polygon",
    "ceva",
    "dual-hesse",
    "hesse",
    "pg",
    "right-triangle",
    "pencil-plus",
)


class ParameterOutOfRange(ValueError):
    pass


class UnsupportedField(ValueError):
    pass


class GeneratorMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    field: object = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def __str__(self):
        s = " ".join([self.name, *map(str, self.params)])
        return f"{s} over {self.field!r}" if self.field is not None else s


def _need(spec: FamilySpec, n: int) -> tuple[int, ...]:
    if len(spec.params) != n:
        raise ParameterOutOfRange(f"{spec.name} takes {n} parameter(s), got {spec.params}")
    return spec.params


# ---------------------------------------------------------------------------
# closed forms


def _polygon_tv(n: int) -> TVector:
    return TVector(2 * n, [(2, n), (3, n * (n - 1) // 2), (n, 1)])


def _right_triangle_tv(n: int) -> TVector:
    return TVector(
        8 * n,
        [
            (2, 6 * n * n + 6 * n - 8),
            (3, 2 * n * n - 6 * n + 8),
            (4, 2 * n * n + 2 * n - 3),
            (2 * n - 1, 2),
            (2 * n + 1, 2),
        ],
    )


def pencil_plus_fixed_tvector(n: int, k: int) -> TVector:
    _check_pencil_plus(n, k)
    return TVector(n + k, [(n, 1), (2, n * k + comb(k, 2))])


def _check_pencil_plus(n: int, k: int):
    if n < 2 or k < 1 or n + k < 4:
        raise ParameterOutOfRange(f"pencil-plus needs n >= 2, k >= 1, n + k >= 4 (got {n}, {k})")


def expected_tvector(spec: FamilySpec) -> TVector:
    name = spec.name
    if name == "pencil":
        (d,) = _need(spec, 1)
        _at_least(d, 3, "d")
        return TVector(d, {d: 1})
    if name == "near-pencil":
        (d,) = _need(spec, 1)
        _at_least(d, 3, "d")
        return TVector(d, [(2, d - 1), (d - 1, 1)])
    if name == "general":
        (d,) = _need(spec, 1)
        _at_least(d, 2, "d")
        return TVector(d, {2: comb(d, 2)})
    if name == "quadrilateral":
        _need(spec, 0)
        return TVector(6, {2: 3, 3: 4})
    if name == "polygon":
        (n,) = _need(spec, 1)
        _at_least(n, 3, "n")
        return _polygon_tv(n)
    if name == "ceva":
        n = spec.params[0] if spec.params else None
        if n is None or len(spec.params) > 3:
            raise ParameterOutOfRange("ceva takes n [p [k]]")
        _at_least(n, 3, "n")
        return TVector(3 * n, [(3, n * n), (n, 3)])
    if name == "dual-hesse":
        _need(spec, 0)
        return TVector(9, {3: 12})
    if name == "hesse":
        _need(spec, 0)
        return TVector(12, {2: 12, 4: 9})
    if name == "pg":
        p, k = _pg_params(spec)
        q = p**k
        return TVector(q * q + q + 1, {q + 1: q * q + q + 1})
    if name == "right-triangle":
        (n,) = _need(spec, 1)
        _at_least(n, 3, "n")
        return _right_triangle_tv(n)
    if name == "pencil-plus":
        n, k = _need(spec, 2)
        return pencil_plus_fixed_tvector(n, k)
    raise AssertionError(name)


def _at_least(value: int, low: int, what: str):
    if value < low:
        raise ParameterOutOfRange(f"{what} must be at least {low}, got {value}")


def _pg_params(spec: FamilySpec) -> tuple[int, int]:
    if len(spec.params) == 1:
        p, k = spec.params[0], 1
    else:
        p, k = _need(spec, 2)
    if not is_prime(p) or k < 1:
        raise ParameterOutOfRange(f"pg needs a prime p and k >= 1, got p={p}, k={k}")
    return p, k


# ---------------------------------------------------------------------------
# coordinates


def _pencil_lines(field, n: int) -> list[ProjLine]:
    """n lines through [0, 0, 1]."""
    return [line(field, 0, 1, 0)] + [line(field, 1, s, 0) for s in range(n - 1)]


def _moment_line(field, t) -> ProjLine:
    return line(field, 1, t, t * t)


def _quadrilateral_lines(field=QQ) -> list[ProjLine]:
    rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)]
    return [line(field, *r) for r in rows]


def _polygon_lines(n: int, field: CyclotomicField) -> list[ProjLine]:
    # zeta = exp(i*pi/(2n)) when the field is Q(zeta_4n); angles j*pi/n are zeta^(2j)
    if field.m % (4 * n):
        raise UnsupportedField(f"polygon({n}) needs Q(zeta_m) with 4n | m, got {field!r}")
    z = field.root_of_unity(4 * n)
    half = field(1) / 2
    four_n = 4 * n

    def zp(e):
        return z ** (e % four_n)

    def cos(num):  # cos(num*pi/n)
        return (zp(2 * num) + zp(-2 * num)) * half

    def sin(num):  # sin(num*pi/n) = (w - 1/w)/(2i), i = zeta^n
        return (zp(2 * num - n) - zp(-2 * num - n)) * half

    lines = []
    for k in range(n):
        a = 2 * k + 1
        lines.append(line(field, cos(a), sin(a), -cos(1)))
    for k in range(n):
        lines.append(line(field, sin(k), -cos(k), 0))
    return lines


def _ceva_field(spec: FamilySpec):
    n = spec.params[0]
    if len(spec.params) >= 2:
        p = spec.params[1]
        if not is_prime(p):
            raise ParameterOutOfRange(f"{p} is not prime")
        if len(spec.params) == 3:
            return finite_field(p, spec.params[2])
        if n % p == 0:
            raise UnsupportedField(f"no extension of GF({p}) has primitive {n}-th roots of unity")
        k = 1
        while (p**k - 1) % n:
            k += 1
        return finite_field(p, k)
    return spec.field if spec.field is not None else cyclotomic_field(n)


def _ceva_lines(n: int, field) -> list[ProjLine]:
    if field is QQ:
        raise UnsupportedField(f"Q has no primitive {n}-th root of unity")
    try:
        zeta = field.root_of_unity(n)
    except NoSuchRoot as exc:
        raise UnsupportedField(str(exc)) from None
    powers = [zeta**i for i in range(n)]
    out = []
    for w in powers:
        out.append(line(field, 1, -w, 0))
    for w in powers:
        out.append(line(field, 0, 1, -w))
    for w in powers:
        out.append(line(field, 1, 0, -w))
    return out


def hesse_points(field: CyclotomicField | None = None):
    """The nine inflection points of the Fermat cubic over Q(zeta_3)."""
    field = field or cyclotomic_field(3)
    omega = field.root_of_unity(3)
    pts = []
    for j in range(3):
        w = -(omega**j)
        pts.append(point(field, 0, 1, w))
        pts.append(point(field, 1, 0, w))
        pts.append(point(field, 1, w, 0))
    return pts


def _hesse_lines(field) -> list[ProjLine]:
    pts = hesse_points(field)
    seen = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            l = join(pts[i], pts[j])
            seen.setdefault(l.key, l)
    return [seen[k] for k in sorted(seen)]


def _pg_lines(field: FiniteField) -> list[ProjLine]:
    els = field.elements()
    zero, one = field.zero, field.one
    out = [line(field, zero, zero, one)]
    out += [line(field, zero, one, a) for a in els]
    out += [line(field, one, a, b) for a in els for b in els]
    return out


def _right_triangle_lines(n: int) -> list[ProjLine]:
    from fractions import Fraction

    out = []
    for alpha in range(2 * n + 1):
        out.append(line(QQ, 0, 1, -Fraction(alpha, 2)))
    for alpha in range(2 * n + 1):
        out.append(line(QQ, 1, 0, -Fraction(alpha, 2)))
    for beta in range(2 * n - 1):
        out.append(line(QQ, -1, 1, -(beta - n + 1)))
    for beta in range(2 * n - 1):
        out.append(line(QQ, 1, 1, -(beta + 1)))
    return out


def _build(spec: FamilySpec) -> Arrangement:
    name = spec.name
    expected_tvector(spec)  # parameter validation
    field = spec.field
    tag = str(spec)
    if name in ("pencil", "near-pencil", "general", "quadrilateral", "right-triangle", "pencil-plus"):
        if field not in (None, QQ):
            raise UnsupportedField(f"{name} is generated over Q only")
        field = QQ
    if name == "pencil":
        return Arrangement(field, tuple(_pencil_lines(field, spec.params[0])), tag)
    if name == "near-pencil":
        d = spec.params[0]
        return Arrangement(field, tuple(_pencil_lines(field, d - 1) + [line(field, 0, 0, 1)]), tag)
    if name == "general":
        return Arrangement(field, tuple(_moment_line(field, t) for t in range(spec.params[0])), tag)
    if name == "quadrilateral":
        return Arrangement(field, tuple(_quadrilateral_lines(field)), tag)
    if name == "polygon":
        n = spec.params[0]
        field = field or cyclotomic_field(4 * n)
        if not isinstance(field, CyclotomicField):
            raise UnsupportedField(f"polygon needs a cyclotomic field, got {field!r}")
        return Arrangement(field, tuple(_polygon_lines(n, field)), tag)
    if name in ("ceva", "dual-hesse"):
        n = 3 if name == "dual-hesse" else spec.params[0]
        sub = FamilySpec("ceva", (n,) + (spec.params[1:] if name == "ceva" else ()), spec.field)
        field = _ceva_field(sub)
        return Arrangement(field, tuple(_ceva_lines(n, field)), tag)
    if name == "hesse":
        field = field or cyclotomic_field(3)
        if not isinstance(field, CyclotomicField) or field.m % 3:
            raise UnsupportedField("hesse needs Q(zeta_m) with 3 | m")
        return Arrangement(field, tuple(_hesse_lines(field)), tag)
    if name == "pg":
        p, k = _pg_params(spec)
        field = field or finite_field(p, k)
        if not isinstance(field, FiniteField) or field.q != p**k:
            raise UnsupportedField(f"pg({p},{k}) is generated over GF({p},{k}) only")
        return Arrangement(field, tuple(_pg_lines(field)), tag)
    if name == "right-triangle":
        return Arrangement(field, tuple(_right_triangle_lines(spec.params[0])), tag)
    if name == "pencil-plus":
        n, k = spec.params
        base = Arrangement(field, tuple(_pencil_lines(field, n)), tag)
        return _augment_moment(base, k, tag)
    raise AssertionError(name)


def generate_with_incidence(spec: FamilySpec) -> tuple[Arrangement, IncidenceStructure]:
    arr = _build(spec)
    inc = compute_incidence(arr)
    got = inc.tvector()
    want = expected_tvector(spec)
    if got != want:
        raise GeneratorMismatch(f"{spec}: computed {got}, closed form {want}")
    return arr, inc


def generate(spec: FamilySpec) -> Arrangement:
    return generate_with_incidence(spec)[0]


# ---------------------------------------------------------------------------
# adding lines in general position


def augment_general(tv: TVector, j: int) -> TVector:
    """Add j lines meeting everything (and each other) in new double points."""
    if j < 0:
        raise ParameterOutOfRange("cannot add a negative number of lines")
    if not tv.pair_identity():
        raise ValueError(f"pair identity fails for {tv}")
    out = TVector(tv.d + j, list(tv.items()) + [(2, j * tv.d + comb(j, 2))])
    if not out.pair_identity():
        raise AssertionError("augmentation broke the pair identity")
    return out


def _augment_moment(arr: Arrangement, j: int, provenance: str) -> Arrangement:
    field = arr.field
    lines = list(arr.lines)
    keys = {l.key for l in lines}
    pts = {}
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            p = meet(lines[a], lines[b])
            pts[p.key] = p
    accepted = 0
    for t in count(0):
        if accepted == j:
            break
        cand = _moment_line(field, t)
        if cand.key in keys or any(incident(p, cand) for p in pts.values()):
            continue
        for l in lines:
            p = meet(l, cand)
            pts[p.key] = p
        lines.append(cand)
        keys.add(cand.key)
        accepted += 1
    return Arrangement(field, tuple(lines), provenance)


def augment_coords(arr: Arrangement, j: int) -> Arrangement:
    """Append j moment-curve lines {x + t y + t^2 z = 0}, each adding only nodes.

    Candidates t = 0, 1, 2, ... are accepted only when the line is new and
    avoids every existing intersection point.
    """
    if arr.field is not QQ:
        raise UnsupportedField("augment_coords works over Q")
    if j == 0:
        return arr
    return _augment_moment(arr, j, f"{arr.provenance} + {j} general lines")


def pencil_plus_fixed(n: int, k: int) -> Arrangement:
    return generate(FamilySpec("pencil-plus", (n, k)))
