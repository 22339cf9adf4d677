"""Arrangements, their incidence structures and t-vectors."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import groupby
from math import comb
from typing import Mapping

from .exactfield import QQ
from .projgeom import ProjLine, ProjPoint, cross, meet

__all__ = [
    "ArrangementError",
    "DuplicateLine",
    "Arrangement",
    "IncidenceStructure",
    "TVector",
    "ArrangementClass",
    "compute_incidence",
    "tvector",
    "pair_identity_check",
    "classify",
    "largest_pencil",
]


class ArrangementError(ValueError):
    pass


class DuplicateLine(ArrangementError):
    pass


@dataclass(frozen=True)
class Arrangement:
    field: object
    lines: tuple[ProjLine, ...]
    provenance: str = "file"

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) < 2:
            raise ArrangementError("an arrangement needs at least two lines")
        seen = {}
        for i, l in enumerate(lines):
            if l.field is not self.field:
                raise ArrangementError(f"line {i} is not over {self.field!r}")
            if l.key in seen:
                raise DuplicateLine(f"line {i} repeats line {seen[l.key]}: {l!r}")
            seen[l.key] = i

    @property
    def d(self) -> int:
        return len(self.lines)

    def __len__(self):
        return len(self.lines)


@dataclass(frozen=True)
class TVector:
    """Number of lines plus the nonzero counts t_m, m >= 2."""

    d: int
    counts: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        raw = self.counts
        items = raw.items() if isinstance(raw, Mapping) else raw
        merged: dict[int, int] = {}
        for m, t in items:
            m, t = int(m), int(t)
            if m < 2 or t < 0:
                raise ValueError(f"invalid entry t_{m} = {t}")
            merged[m] = merged.get(m, 0) + t
        object.__setattr__(self, "counts", tuple(sorted((m, t) for m, t in merged.items() if t)))
        if self.d < 2:
            raise ValueError("an arrangement has at least two lines")

    def t(self, m: int) -> int:
        for k, v in self.counts:
            if k == m:
                return v
        return 0

    def items(self):
        return iter(self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def r(self) -> int:
        """Number of points, sum of t_m."""
        return sum(t for _, t in self.counts)

    def moment(self, k: int) -> int:
        return sum(m**k * t for m, t in self.counts)

    @property
    def max_multiplicity(self) -> int:
        return max((m for m, _ in self.counts), default=0)

    def pair_identity(self) -> bool:
        return comb(self.d, 2) == sum(comb(m, 2) * t for m, t in self.counts)

    def __str__(self):
        return ";".join([f"d={self.d}"] + [f"t{m}={t}" for m, t in self.counts])

    @classmethod
    def parse(cls, text: str) -> TVector:
        """Parse the inline syntax ``"d=9;t3=12"``."""
        d = None
        counts: dict[int, int] = {}
        for part in filter(None, (p.strip() for p in re.split(r"[;,]", text))):
            m = re.fullmatch(r"d\s*=\s*(\d+)|t_?(\d+)\s*=\s*(\d+)", part)
            if not m:
                raise ValueError(f"bad t-vector component {part!r}")
            if m.group(1) is not None:
                d = int(m.group(1))
            else:
                counts[int(m.group(2))] = counts.get(int(m.group(2)), 0) + int(m.group(3))
        if d is None:
            raise ValueError("t-vector needs d=<lines>")
        return cls(d, counts)


@dataclass(frozen=True)
class IncidenceStructure:
    arrangement: Arrangement
    points: tuple[ProjPoint, ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return self.arrangement.d

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.incidence)

    def points_on_lines(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.d)]
        for i, lines in enumerate(self.incidence):
            for j in lines:
                out[j].append(i)
        return out

    def matrix(self) -> list[list[int]]:
        """0/1 matrix with a[i][j] = 1 iff point i lies on line j."""
        rows = []
        for lines in self.incidence:
            row = [0] * self.d
            for j in lines:
                row[j] = 1
            rows.append(row)
        return rows

    def tvector(self) -> TVector:
        return tvector(self)


def compute_incidence(arr: Arrangement) -> IncidenceStructure:
    """All pairwise meets, grouped by canonical point encoding."""
    lines = arr.lines
    d = len(lines)
    meets = []
    for i in range(d):
        li = lines[i]
        for j in range(i + 1, d):
            p = meet(li, lines[j])
            meets.append((p.key, i, j, p))
    meets.sort(key=lambda rec: rec[0])

    points = []
    incidence = []
    for _, group in groupby(meets, key=lambda rec: rec[0]):
        group = list(group)
        on = sorted({i for rec in group for i in rec[1:3]})
        if len(group) != comb(len(on), 2):
            raise AssertionError("inconsistent pairwise meets at one point")
        points.append(group[0][3])
        incidence.append(tuple(on))
    return IncidenceStructure(arr, tuple(points), tuple(incidence))


def tvector(inc: IncidenceStructure) -> TVector:
    counts: dict[int, int] = {}
    for lines in inc.incidence:
        counts[len(lines)] = counts.get(len(lines), 0) + 1
    tv = TVector(inc.d, counts)
    if not tv.pair_identity():
        raise AssertionError(f"pair identity fails for computed t-vector {tv}")
    return tv


def pair_identity_check(tv: TVector) -> bool:
    return tv.pair_identity()


class ArrangementClass(str, enum.Enum):
    TRIVIAL = "Trivial"
    QUASI_TRIVIAL = "QuasiTrivial"
    GENERAL_POSITION = "GeneralPosition"
    OTHER = "Other"


def classify(tv: TVector) -> ArrangementClass:
    d = tv.d
    if tv.t(d) == 1:
        return ArrangementClass.TRIVIAL
    if tv.t(d - 1) == 1:
        return ArrangementClass.QUASI_TRIVIAL
    if tv.counts == ((2, comb(d, 2)),):
        return ArrangementClass.GENERAL_POSITION
    return ArrangementClass.OTHER


def largest_pencil(inc: IncidenceStructure) -> tuple[int, int]:
    """(largest multiplicity, lines missing the first point attaining it)."""
    best = 0
    for lines in inc.incidence:
        if len(lines) > best:
            best = len(lines)
    return best, inc.d - best


def brute_force_points(arr: Arrangement) -> list[tuple[ProjPoint, frozenset[int]]]:
    """Quadratic grouping by proportionality of raw cross products.

    Independent of point normalization, so it cross-checks the sorted grouping.
    """
    groups: list[tuple[tuple, set[int]]] = []
    lines = arr.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = cross(lines[i].coords, lines[j].coords)
            for q, members in groups:
                if all(c.is_zero() for c in cross(p, q)):
                    members.update((i, j))
                    break
            else:
                groups.append((p, {i, j}))
    return [(ProjPoint(p), frozenset(s)) for p, s in groups]


def rational_arrangement(rows, provenance: str = "file") -> Arrangement:
    """Arrangement over Q from integer/Fraction coefficient rows."""
    from .projgeom import line

    return Arrangement(QQ, tuple(line(QQ, *r) for r in rows), provenance)
