from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linarr.exactfield import QQ
from linarr.families import FamilySpec, generate
from linarr.incidence import Arrangement, TVector, compute_incidence
from linarr.projgeom import line
from linarr.invariants import (
    DUAL_HESSE,
    EmptyPointSet,
    FieldClass,
    NotApplicable,
    NotReal,
    c1sq,
    c2,
    c2_lower_bound_check,
    chern,
    face_counts,
    field_ceiling_check,
    h_linear,
    positivity_check,
    slope,
    slope_bounds_check,
)

FANO = TVector(7, {3: 7})
QUAD = TVector(6, {2: 3, 3: 4})


def gp(d):
    return TVector(d, {2: comb(d, 2)})


def test_chern_examples():
    near = TVector(5, {2: 4, 4: 1})
    assert (c1sq(near), c2(near)) == (0, 0)
    assert (c1sq(gp(4)), c2(gp(4))) == (1, 1)
    ch = chern(DUAL_HESSE)
    assert (ch.c1sq, ch.c2, ch.slope) == (24, 9, Fraction(8, 3))
    assert slope(near) is None


@pytest.mark.parametrize("d", range(4, 41))
def test_general_position_closed_forms(d):
    tv = gp(d)
    assert c1sq(tv) == (d - 3) ** 2
    assert 2 * c2(tv) == (d - 2) * (d - 3)
    assert slope(tv) == Fraction(2 * (d - 3), d - 2)


def test_slope_bounds_examples():
    r = slope_bounds_check(gp(7))
    assert r.lower_equality and r.slope == Fraction(8, 5) and r.ok
    r = slope_bounds_check(FANO)
    assert r.upper_equality and r.slope == 3 and r.ok
    r = slope_bounds_check(DUAL_HESSE)
    assert not r.lower_equality and not r.upper_equality and r.ok
    assert not slope_bounds_check(TVector(5, {5: 1})).applicable


def test_positivity_examples():
    assert positivity_check(QUAD) and (c1sq(QUAD), c2(QUAD)) == (5, 2)
    assert positivity_check(gp(4))
    ceva4 = TVector(12, {3: 16, 4: 3})
    assert positivity_check(ceva4) and (c1sq(ceva4), c2(ceva4)) == (53, 20)
    with pytest.raises(NotApplicable):
        positivity_check(TVector(5, {2: 4, 4: 1}))


def test_h_linear_examples():
    assert h_linear(FANO) == -2
    assert h_linear(DUAL_HESSE) == Fraction(-9, 4)
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert h_linear(TVector(q * q + q + 1, {q + 1: q * q + q + 1})) == -q
    with pytest.raises(EmptyPointSet):
        h_linear(TVector(2, {}))


def test_c2_lower_bound_examples():
    assert c2_lower_bound_check(FANO, 3) and c2(FANO) == 1 * 3
    assert c2_lower_bound_check(DUAL_HESSE, 3)
    assert c2_lower_bound_check(gp(6), 2)


def test_face_counts_examples():
    assert face_counts(QUAD, True) == face_counts(QUAD, True)
    f = face_counts(QUAD, True)
    assert (f.f0, f.f1, f.f2, f.simplicial) == (7, 18, 12, True)
    f = face_counts(gp(5), True)
    assert (f.f0, f.f1, f.f2, f.simplicial) == (10, 20, 11, False)
    tri = TVector(6, {2: 3, 3: 3 + 1})  # polygon(3) has quadrilateral combinatorics
    assert face_counts(tri, True).simplicial
    with pytest.raises(NotReal):
        face_counts(QUAD, False)


def test_field_ceiling_examples():
    hesse = TVector(12, {2: 12, 4: 9})
    r = field_ceiling_check(hesse, "ComplexOnly")
    assert r.slope == Fraction(5, 2) and r.ok
    r = field_ceiling_check(DUAL_HESSE, FieldClass.COMPLEX)
    assert r.slope == Fraction(8, 3) and r.ok
    # the same numbers declared real violate the real ceiling
    assert "slope<=5/2" in field_ceiling_check(DUAL_HESSE, FieldClass.REAL).violations
    r = field_ceiling_check(TVector(21, {5: 21}), "PositiveChar")
    assert r.slope == 3 and r.ok
    assert (c1sq(TVector(21, {5: 21})), c2(TVector(21, {5: 21}))) == (135, 45)


@st.composite
def tvectors(draw):
    """Pair-identity t-vectors; not necessarily realizable."""
    d = draw(st.integers(4, 40))
    budget = comb(d, 2)
    counts = {}
    for m in draw(st.lists(st.integers(3, d), max_size=6)):
        if comb(m, 2) <= budget:
            counts[m] = counts.get(m, 0) + 1
            budget -= comb(m, 2)
    counts[2] = counts.get(2, 0) + budget
    return TVector(d, counts)


@settings(max_examples=300, deadline=None)
@given(tv=tvectors())
def test_pair_identity_and_h_linear_equivalence(tv):
    assert tv.pair_identity()
    h_linear(tv)  # asserts the two formulas agree


_PG5_LINES = generate(FamilySpec("pg", (5, 1))).lines
_GRID_LINES = tuple(
    sorted({line(QQ, a, b, c) for a in (0, 1) for b in (-1, 0, 1, 2) for c in (-2, -1, 0, 1, 2) if (a, b) != (0, 0)})
)


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_slope_bounds_on_realized_subarrangements(data):
    pool = data.draw(st.sampled_from([_PG5_LINES, _GRID_LINES]))
    idx = data.draw(st.sets(st.integers(0, len(pool) - 1), min_size=4, max_size=16))
    lines = tuple(pool[i] for i in sorted(idx))
    tv = compute_incidence(Arrangement(lines[0].field, lines)).tvector()
    r = slope_bounds_check(tv)
    if not r.applicable:
        return
    assert positivity_check(tv)
    assert r.ok
    assert r.lower_equality == (tv == gp(tv.d))
