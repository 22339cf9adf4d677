"""Points, lines and projectivities of the projective plane over an exact field."""

from __future__ import annotations

from typing import Sequence

from .exactfield import DescriptorMismatch, FieldElement

__all__ = [
    "ProjPoint",
    "ProjLine",
    "Projectivity",
    "GeometryError",
    "CoincidentLines",
    "CoincidentPoints",
    "DegenerateQuad",
    "SingularMatrix",
    "point",
    "line",
    "meet",
    "join",
    "incident",
    "concurrent",
    "collinear",
    "det3",
    "cross",
    "projectivity_from_quads",
    "apply",
    "apply_line",
]


class GeometryError(ValueError):
    pass


class CoincidentLines(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class DegenerateQuad(GeometryError):
    pass


class SingularMatrix(GeometryError):
    pass


def _normalize(coords: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    for i, c in enumerate(coords):
        if not c.is_zero():
            if c.is_one():
                return tuple(coords)
            inv = c.inverse()
            out = list(coords)
            out[i] = c.field.one
            for j in range(i + 1, 3):
                out[j] = coords[j] * inv
            return tuple(out)
    raise GeometryError("all homogeneous coordinates are zero")


class _Triple:
    __slots__ = ("coords", "_key")

    def __init__(self, coords: Sequence[FieldElement], *, normalized: bool = False):
        if len(coords) != 3:
            raise GeometryError("homogeneous triples have exactly three entries")
        f = coords[0].field
        if coords[1].field is not f or coords[2].field is not f:
            raise DescriptorMismatch("mixed fields in a homogeneous triple")
        self.coords = tuple(coords) if normalized else _normalize(coords)
        self._key = None

    @property
    def field(self):
        return self.coords[0].field

    @property
    def key(self) -> tuple[bytes, bytes, bytes]:
        """Canonical encoding; equal keys <=> same projective class."""
        if self._key is None:
            self._key = tuple(c.encode() for c in self.coords)
        return self._key

    def encode(self) -> bytes:
        return b"|".join(self.key)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.key == other.key

    def __lt__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.key < other.key

    def __hash__(self):
        return hash((type(self).__name__, self.key))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


class ProjPoint(_Triple):
    __slots__ = ()

    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


class ProjLine(_Triple):
    """Line ``a*x + b*y + c*z = 0`` with normalized coefficients (a, b, c)."""

    __slots__ = ()

    def __repr__(self):
        return "{" + ", ".join(str(c) for c in self.coords) + "}"


def _lift(field, values):
    return [v if isinstance(v, FieldElement) else field(v) for v in values]


def point(field, x, y, z) -> ProjPoint:
    return ProjPoint(_lift(field, (x, y, z)))


def line(field, a, b, c) -> ProjLine:
    return ProjLine(_lift(field, (a, b, c)))


def cross(u, v) -> tuple[FieldElement, FieldElement, FieldElement]:
    u0, u1, u2 = u
    v0, v1, v2 = v
    return (u1 * v2 - u2 * v1, u2 * v0 - u0 * v2, u0 * v1 - u1 * v0)


def det3(rows) -> FieldElement:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    c = cross(l1.coords, l2.coords)
    if all(x.is_zero() for x in c):
        raise CoincidentLines(f"{l1!r} and {l2!r} coincide")
    return ProjPoint(c)


def join(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    c = cross(p1.coords, p2.coords)
    if all(x.is_zero() for x in c):
        raise CoincidentPoints(f"{p1!r} and {p2!r} coincide")
    return ProjLine(c)


def incident(p: ProjPoint, l: ProjLine) -> bool:
    (x, y, z), (a, b, c) = p.coords, l.coords
    if x.field is not a.field:
        raise DescriptorMismatch("point and line live over different fields")
    return (a * x + b * y + c * z).is_zero()


def concurrent(l1: ProjLine, l2: ProjLine, l3: ProjLine) -> bool:
    return det3((l1.coords, l2.coords, l3.coords)).is_zero()


def collinear(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> bool:
    return det3((p1.coords, p2.coords, p3.coords)).is_zero()


# ---------------------------------------------------------------------------
# projectivities


def _matmul(a, b):
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3)) for i in range(3)
    )


def _cofactor(m):
    """Cofactor matrix: equals det(m) * inverse(m) transposed."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, f * g - d * i, d * h - e * g),
        (c * h - b * i, a * i - c * g, b * g - a * h),
        (b * f - c * e, c * d - a * f, a * e - b * d),
    )


def _transpose(m):
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


class Projectivity:
    """Invertible 3x3 matrix acting on homogeneous point coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix, *, scale: bool = True):
        rows = tuple(tuple(r) for r in matrix)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise GeometryError("projectivity needs a 3x3 matrix")
        if det3(rows).is_zero():
            raise SingularMatrix("projectivity matrix is singular")
        if scale:
            flat = [x for r in rows for x in r]
            lead = next(x for x in flat if not x.is_zero())
            if not lead.is_one():
                inv = lead.inverse()
                rows = tuple(tuple(x * inv for x in r) for r in rows)
        self.matrix = rows

    @classmethod
    def identity(cls, field) -> Projectivity:
        z, o = field.zero, field.one
        return cls(((o, z, z), (z, o, z), (z, z, o)))

    @property
    def field(self):
        return self.matrix[0][0].field

    def det(self) -> FieldElement:
        return det3(self.matrix)

    def __matmul__(self, other: Projectivity) -> Projectivity:
        return Projectivity(_matmul(self.matrix, other.matrix))

    def inverse(self) -> Projectivity:
        return Projectivity(_transpose(_cofactor(self.matrix)))

    def __eq__(self, other):
        if not isinstance(other, Projectivity):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "Projectivity(" + "; ".join(" ".join(str(x) for x in r) for r in self.matrix) + ")"


def _matvec(m, v):
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))


def apply(t: Projectivity, p: ProjPoint) -> ProjPoint:
    return ProjPoint(_matvec(t.matrix, p.coords))


def apply_line(t: Projectivity, l: ProjLine) -> ProjLine:
    # lines are covectors: they move by the inverse transpose, which the
    # cofactor matrix gives up to the scalar det
    return ProjLine(_matvec(_cofactor(t.matrix), l.coords))


def _frame_matrix(pts: Sequence[ProjPoint]):
    """Matrix sending e1, e2, e3, (1,1,1) to the four points."""
    cols = [p.coords for p in pts[:3]]
    basis = _transpose(cols)
    d = det3(basis)
    if d.is_zero():
        raise DegenerateQuad("first three points are collinear")
    # solve basis * lam = p4 by Cramer's rule
    target = pts[3].coords
    lam = []
    for k in range(3):
        m = [list(r) for r in basis]
        for i in range(3):
            m[i][k] = target[i]
        lk = det3(m)
        if lk.is_zero():
            raise DegenerateQuad("fourth point is collinear with two of the others")
        lam.append(lk)
    return tuple(tuple(basis[i][j] * lam[j] for j in range(3)) for i in range(3))


def projectivity_from_quads(src: Sequence[ProjPoint], dst: Sequence[ProjPoint]) -> Projectivity:
    """The unique projectivity with ``src[i] -> dst[i]`` for four points in general position."""
    if len(src) != 4 or len(dst) != 4:
        raise GeometryError("need exactly four source and four target points")
    a = _frame_matrix(src)
    b = _frame_matrix(dst)
    return Projectivity(_matmul(b, _transpose(_cofactor(a))))
