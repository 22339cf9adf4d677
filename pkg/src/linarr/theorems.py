"""De Bruijn-Erdos verification, the zero-diagonal permutation, and field recovery.

``reconstruct_field`` rebuilds the ground field of a finite projective plane
arrangement from incidences alone.  After moving four points in general
position to [1,0,1], [0,1,1], [1,0,0], [0,1,0], the field is the set of
x with [1,x,0] a point, and every operation is a join/meet chain:

* negation   c -> [0,-c,1] -> [1,-c,1] -> [1,-c,0]
* successor  c -> [1,c+1,1] -> [1,c+1,0]
* product    ([1,a+1,1] v [1/b+1,1,1]) ^ {z=0} = [1,-ab,0], then negate

Case split for the tables: a*0 = 0*a = 0 directly; for b != 0 the product
chain above (it never degenerates since both auxiliary points lie off
{z=0}).  Inverses are read off the finished multiplication table.  Sums use
a + 0 = a and, for b != 0, a + b = b * (a * b^-1 + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .incidence import Arrangement, IncidenceStructure, compute_incidence
from .projgeom import ProjLine, ProjPoint, apply, apply_line, collinear, join, line, meet, point, projectivity_from_quads

__all__ = [
    "TrivialInput",
    "NoZeroDiagonal",
    "NotProjectivePlane",
    "ChainFailure",
    "DbeReport",
    "ReconstructedField",
    "dbe_verify",
    "zero_diagonal_permutation",
    "max_bipartite_matching",
    "reconstruct_field",
    "parse_matrix",
]


class TrivialInput(ValueError):
    pass


class NoZeroDiagonal(ValueError):
    pass


class NotProjectivePlane(ValueError):
    pass


class ChainFailure(AssertionError):
    pass


@dataclass(frozen=True)
class DbeReport:
    r: int
    d: int
    inequality_ok: bool
    equality: str | None = None
    q: int | None = None
    ok: bool = True


def _plane_order(inc: IncidenceStructure) -> int | None:
    """q when the incidences form a projective plane of order q, else None."""
    mults = set(inc.multiplicities)
    per_line = {len(pts) for pts in inc.points_on_lines()}
    if len(mults) != 1 or per_line != mults:
        return None
    q = mults.pop() - 1
    return q if inc.d == q * q + q + 1 else None


def dbe_verify(inc: IncidenceStructure) -> DbeReport:
    """Check sum t_m >= d and classify the equality case."""
    tv = inc.tvector()
    d, r = tv.d, tv.r
    if tv.t(d) == 1:
        raise TrivialInput("the inequality is stated for nontrivial arrangements")
    if r != d:
        return DbeReport(r, d, r >= d, ok=r >= d)
    quasi = tv.t(d - 1) == 1
    q = _plane_order(inc)
    if quasi and q is None:
        return DbeReport(r, d, True, "QuasiTrivial")
    if q is not None and not quasi:
        return DbeReport(r, d, True, "FiniteProjectivePlane", q)
    # both or neither: the equality characterization failed
    return DbeReport(r, d, True, None, q, ok=False)


# ---------------------------------------------------------------------------
# zero-diagonal permutation


def max_bipartite_matching(adj: Sequence[Sequence[int]], n_right: int) -> list[int]:
    """Augmenting-path matching; returns ``match_left[u]`` (-1 when unmatched)."""
    match_right = [-1] * n_right
    match_left = [-1] * len(adj)

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_right[v] == -1 or augment(match_right[v], seen):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in range(len(adj)):
        augment(u, set())
    return match_left


def zero_diagonal_permutation(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Row permutation ``sigma`` with ``matrix[sigma[i]][i] == 0`` for every column i."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("zero-diagonal permutation needs a square matrix")
    # left side: columns, right side: rows with a zero in that column
    adj = [[i for i in range(n) if matrix[i][j] == 0] for j in range(n)]
    sigma = max_bipartite_matching(adj, n)
    if -1 in sigma:
        raise NoZeroDiagonal("no permutation puts zeros on the whole diagonal")
    return sigma


def parse_matrix(text: str) -> list[list[int]]:
    """Read ``matrix r d`` followed by r rows of d entries in {0, 1}."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0][0] != "matrix" or len(rows[0]) != 3:
        raise ValueError("matrix file must start with 'matrix <r> <d>'")
    r, d = int(rows[0][1]), int(rows[0][2])
    body = rows[1:]
    if len(body) != r:
        raise ValueError(f"expected {r} rows, found {len(body)}")
    out = []
    for i, row in enumerate(body, 1):
        if len(row) != d or any(x not in ("0", "1") for x in row):
            raise ValueError(f"row {i}: expected {d} entries in {{0, 1}}")
        out.append([int(x) for x in row])
    return out


# ---------------------------------------------------------------------------
# field reconstruction


@dataclass(frozen=True)
class ReconstructedField:
    q: int
    elements: tuple
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    is_field: bool
    matched_order: bool
    matches_ambient: bool
    frame: tuple[ProjPoint, ...] = ()

    def labels(self) -> list[str]:
        return [str(e) for e in self.elements]


def _general_position_quad(points: Sequence[ProjPoint]) -> tuple[ProjPoint, ...]:
    for quad in combinations(points, 4):
        if not any(collinear(*tri) for tri in combinations(quad, 3)):
            return quad
    raise NotProjectivePlane("no four points in general position")


class _Plane:
    """Transformed point set with checked join/meet chains."""

    def __init__(self, field, points):
        self.field = field
        self.keys = {p.key for p in points}
        o, z = field.one, field.zero
        self.x0 = line(field, o, z, z)
        self.z0 = line(field, z, z, o)
        self.x_eq_z = line(field, o, z, -o)
        self.y_eq_z = line(field, z, o, -o)
        self.p101 = point(field, o, z, o)
        self.p011 = point(field, z, o, o)
        self.p100 = point(field, o, z, z)
        self.p001 = point(field, z, z, o)

    def check(self, p: ProjPoint) -> ProjPoint:
        if p.key not in self.keys:
            raise ChainFailure(f"chain point {p!r} is not a point of the arrangement")
        return p

    def on_axis(self, c) -> ProjPoint:
        return self.check(point(self.field, 1, c, 0))

    def step(self, a: ProjPoint, b: ProjPoint, l: ProjLine) -> ProjPoint:
        return self.check(meet(join(a, b), l))

    def neg(self, c):
        p = self.on_axis(c)
        p = self.step(p, self.p101, self.x0)  # [0,-c,1]
        p = self.step(p, self.p100, self.x_eq_z)  # [1,-c,1]
        p = self.step(p, self.p001, self.z0)  # [1,-c,0]
        return p.coords[1]

    def succ(self, c):
        p = self.on_axis(c)
        p = self.step(p, self.p011, self.x_eq_z)  # [1,c+1,1]
        p = self.step(p, self.p001, self.z0)  # [1,c+1,0]
        return p.coords[1]

    def mul(self, a, b):
        if a.is_zero() or b.is_zero():
            return self.field.zero
        pa = self.step(self.on_axis(a), self.p011, self.x_eq_z)  # [1,a+1,1]
        pb = self.step(self.on_axis(b), self.p101, self.y_eq_z)  # [1/b+1,1,1]
        minus_ab = self.step(pa, pb, self.z0).coords[1]
        return self.neg(minus_ab)


def _table_is_field(add, mul, zero: int, one: int) -> bool:
    n = len(add)
    idx = range(n)
    if zero == one:
        return False
    for a in idx:
        if add[a][zero] != a or mul[a][one] != a:
            return False
        if not any(add[a][b] == zero for b in idx):
            return False
        if a != zero and not any(mul[a][b] == one for b in idx):
            return False
        for b in idx:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                return False
            for c in idx:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    return False
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    return False
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return False
    return True


def reconstruct_field(arr: Arrangement, inc: IncidenceStructure | None = None) -> ReconstructedField:
    inc = inc or compute_incidence(arr)
    report = dbe_verify(inc)
    if report.equality != "FiniteProjectivePlane":
        raise NotProjectivePlane(f"{arr.provenance}: not a finite projective plane arrangement")
    q = report.q
    field = arr.field
    o, z = field.one, field.zero
    frame = _general_position_quad(inc.points)
    target = [point(field, o, z, o), point(field, z, o, o), point(field, o, z, z), point(field, z, o, z)]
    t = projectivity_from_quads(frame, target)
    moved = [apply(t, p) for p in inc.points]
    plane = _Plane(field, moved)
    moved_lines = {apply_line(t, l).key for l in arr.lines}
    for l in (plane.x0, plane.z0, plane.x_eq_z, plane.y_eq_z):
        if l.key not in moved_lines:
            raise ChainFailure(f"frame line {l!r} is missing from the arrangement")

    elements = sorted(
        (p.coords[1] for p in moved if p.coords[0].is_one() and p.coords[2].is_zero()),
        key=lambda e: e.encode(),
    )
    index = {e.encode(): i for i, e in enumerate(elements)}

    def label(e):
        try:
            return index[e.encode()]
        except KeyError:
            raise ChainFailure(f"{e} escaped the recovered set") from None

    n = len(elements)
    # closure under negation and successor, checked through the chains
    for e in elements:
        label(plane.neg(e))
        label(plane.succ(e))
    mul = [[label(plane.mul(a, b)) for b in elements] for a in elements]
    zero, one = label(z), label(o)
    inverse = {}
    for i in range(n):
        if i != zero:
            hits = [j for j in range(n) if mul[i][j] == one]
            if len(hits) != 1:
                raise ChainFailure(f"{elements[i]} has no unique inverse")
            inverse[i] = hits[0]
    add = [[0] * n for _ in range(n)]
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if j == zero:
                add[i][j] = i
                continue
            ratio = elements[mul[i][inverse[j]]]
            add[i][j] = mul[j][label(plane.succ(ratio))]
    add_t = tuple(map(tuple, add))
    mul_t = tuple(map(tuple, mul))
    ambient = all(
        elements[add[i][j]] == a + b and elements[mul[i][j]] == a * b
        for i, a in enumerate(elements)
        for j, b in enumerate(elements)
    )
    return ReconstructedField(
        q=q,
        elements=tuple(elements),
        add_table=add_t,
        mul_table=mul_t,
        is_field=_table_is_field(add_t, mul_t, zero, one),
        matched_order=n == q,
        matches_ambient=ambient,
        frame=tuple(frame),
    )
