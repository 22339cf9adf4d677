import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linarr.exactfield import QQ, cyclotomic_field, finite_field
from linarr.projgeom import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateQuad,
    GeometryError,
    Projectivity,
    SingularMatrix,
    apply,
    apply_line,
    collinear,
    concurrent,
    incident,
    join,
    line,
    meet,
    point,
    projectivity_from_quads,
)


def test_normalization():
    assert point(QQ, 0, 2, 4).coords == (QQ(0), QQ(1), QQ(2))
    assert point(QQ, 3, 6, 9) == point(QQ, 1, 2, 3)
    with pytest.raises(GeometryError):
        point(QQ, 0, 0, 0)


def test_meet_examples():
    assert meet(line(QQ, 1, 0, 0), line(QQ, 0, 1, 0)) == point(QQ, 0, 0, 1)
    assert meet(line(QQ, 0, 1, 0), line(QQ, 0, 1, -1)) == point(QQ, 1, 0, 0)
    k = cyclotomic_field(3)
    z = k.zeta()
    l1, l2 = line(k, 1, -z, 0), line(k, 0, 1, -1)
    p = meet(l1, l2)
    assert p == point(k, 1, z * z, z * z)
    assert incident(p, l1) and incident(p, l2)
    with pytest.raises(CoincidentLines):
        meet(l1, line(k, 2, -2 * z, 0))


def test_join_examples():
    assert join(point(QQ, 1, 0, 0), point(QQ, 0, 1, 0)) == line(QQ, 0, 0, 1)
    assert join(point(QQ, 1, 1, 1), point(QQ, 1, 2, 3)) == line(QQ, 1, -2, 1)
    for c in (-3, 1, 5):
        l = join(point(QQ, 1, c, 0), point(QQ, 1, 0, 1))
        assert meet(l, line(QQ, 1, 0, 0)) == point(QQ, 0, -c, 1)
    with pytest.raises(CoincidentPoints):
        join(point(QQ, 1, 2, 3), point(QQ, 2, 4, 6))


def test_incidence_predicates():
    assert not incident(point(QQ, 0, 0, 1), line(QQ, 0, 0, 1))
    assert incident(point(QQ, 1, 1, 1), line(QQ, 1, -1, 0))
    k = cyclotomic_field(3)
    z = k.zeta()
    assert incident(point(k, 1, z, 0), line(k, 1, -(z * z), 0))
    assert concurrent(line(QQ, 1, 0, 0), line(QQ, 0, 1, 0), line(QQ, 1, -1, 0))
    assert not concurrent(line(QQ, 1, 0, 0), line(QQ, 0, 1, 0), line(QQ, 0, 0, 1))
    assert not concurrent(*(line(QQ, 1, t, t * t) for t in (0, 1, 2)))
    assert collinear(point(QQ, 1, 0, 0), point(QQ, 0, 1, 0), point(QQ, 1, 1, 0))


STD = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]


def test_projectivity_from_frame():
    frame = [point(QQ, *c) for c in STD]
    assert projectivity_from_quads(frame, frame) == Projectivity.identity(QQ)
    swapped = [frame[1], frame[0], frame[2], frame[3]]
    t = projectivity_from_quads(frame, swapped)
    o, z = QQ.one, QQ.zero
    assert t == Projectivity(((z, o, z), (o, z, z), (z, z, o)))
    assert apply(t, point(QQ, 1, 0, 0)) == point(QQ, 0, 1, 0)
    assert apply(Projectivity.identity(QQ), point(QQ, 1, 2, 3)) == point(QQ, 1, 2, 3)


def test_projectivity_errors():
    with pytest.raises(SingularMatrix):
        Projectivity([[QQ(1)] * 3] * 3)
    bad = [point(QQ, 1, 0, 0), point(QQ, 0, 1, 0), point(QQ, 1, 1, 0), point(QQ, 0, 0, 1)]
    with pytest.raises(DegenerateQuad):
        projectivity_from_quads(bad, bad)


def _random_quad(field, rng):
    while True:
        try:
            pts = [point(field, *[rng.randint(-9, 9) for _ in range(3)]) for _ in range(4)]
        except GeometryError:
            continue
        if len(set(pts)) == 4 and not any(
            collinear(*(pts[i] for i in tri)) for tri in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
        ):
            return pts


@pytest.mark.parametrize("field", [QQ, finite_field(7), finite_field(3, 2)], ids=repr)
def test_projectivity_from_quads_maps_points(field):
    rng = random.Random(1)
    for _ in range(15):
        src, dst = _random_quad(field, rng), _random_quad(field, rng)
        t = projectivity_from_quads(src, dst)
        assert [apply(t, p) for p in src] == dst
        inv = t.inverse()
        assert [apply(inv, p) for p in dst] == src
        assert (t @ inv) == Projectivity.identity(field)


coord = st.integers(-6, 6)


@settings(max_examples=80, deadline=None)
@given(m=st.lists(coord, min_size=9, max_size=9), p=st.tuples(coord, coord, coord), l=st.tuples(coord, coord, coord))
def test_apply_preserves_incidence(m, p, l):
    rows = [[QQ(m[3 * i + j]) for j in range(3)] for i in range(3)]
    try:
        t = Projectivity(rows)
        pp = point(QQ, *p)
        ll = line(QQ, *l)
    except GeometryError:
        return
    assert incident(pp, ll) == incident(apply(t, pp), apply_line(t, ll))


@settings(max_examples=60, deadline=None)
@given(a=st.tuples(coord, coord, coord), b=st.tuples(coord, coord, coord))
def test_join_meet_duality(a, b):
    try:
        p, q = point(QQ, *a), point(QQ, *b)
        l = join(p, q)
    except GeometryError:
        return
    assert incident(p, l) and incident(q, l)
    m = line(QQ, *a)
    n = line(QQ, *b)
    x = meet(m, n)
    assert incident(x, m) and incident(x, n)
