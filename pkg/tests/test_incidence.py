import random

import pytest

from linarr.exactfield import QQ, finite_field
from linarr.families import FamilySpec, generate
from linarr.incidence import (
    Arrangement,
    ArrangementClass,
    ArrangementError,
    DuplicateLine,
    TVector,
    brute_force_points,
    classify,
    compute_incidence,
    largest_pencil,
    pair_identity_check,
    rational_arrangement,
)
from linarr.projgeom import GeometryError, Projectivity, apply_line, line

QUAD = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)]


def test_quadrilateral_tvector():
    tv = compute_incidence(rational_arrangement(QUAD)).tvector()
    assert tv == TVector(6, {2: 3, 3: 4})


def test_fano_tvector():
    f = finite_field(2)
    lines = [line(f, *c) for c in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]]
    assert compute_incidence(Arrangement(f, lines)).tvector() == TVector(7, {3: 7})


def test_moment_lines_general_position():
    arr = rational_arrangement([(1, t, t * t) for t in range(5)])
    assert compute_incidence(arr).tvector() == TVector(5, {2: 10})


def test_pencil_and_pg3():
    assert compute_incidence(generate(FamilySpec("pencil", (5,)))).tvector() == TVector(5, {5: 1})
    assert compute_incidence(generate(FamilySpec("pg", (3, 1)))).tvector() == TVector(13, {4: 13})


def test_pair_identity_examples():
    assert pair_identity_check(TVector(6, {2: 3, 3: 4}))
    assert not pair_identity_check(TVector(9, {3: 11}))
    for n in range(3, 30):
        tv = TVector(
            8 * n,
            [(2, 6 * n * n + 6 * n - 8), (3, 2 * n * n - 6 * n + 8), (4, 2 * n * n + 2 * n - 3), (2 * n - 1, 2), (2 * n + 1, 2)],
        )
        assert pair_identity_check(tv)
        assert sum((m * (m - 1) // 2) * t for m, t in tv.items()) == 32 * n * n - 4 * n


def test_classify_examples():
    assert classify(TVector(5, {5: 1})) is ArrangementClass.TRIVIAL
    assert classify(TVector(5, {2: 4, 4: 1})) is ArrangementClass.QUASI_TRIVIAL
    assert classify(TVector(5, {2: 10})) is ArrangementClass.GENERAL_POSITION
    assert classify(TVector(9, {3: 12})) is ArrangementClass.OTHER


def test_largest_pencil_examples():
    assert largest_pencil(compute_incidence(generate(FamilySpec("pencil", (7,))))) == (7, 0)
    assert largest_pencil(compute_incidence(generate(FamilySpec("pg", (2, 1))))) == (3, 4)
    assert largest_pencil(compute_incidence(generate(FamilySpec("near-pencil", (6,))))) == (5, 1)


def test_tvector_parse_and_str():
    tv = TVector.parse("d=9;t3=12")
    assert tv == TVector(9, {3: 12}) and str(tv) == "d=9;t3=12"
    assert TVector.parse(" d = 6 ; t2=3; t_3=4") == TVector(6, {2: 3, 3: 4})
    assert TVector(6, [(2, 1), (2, 2), (3, 4)]) == TVector(6, {2: 3, 3: 4})
    for bad in ("t3=12", "d=9;x=1", "d=9;t1=3"):
        with pytest.raises(ValueError):
            TVector.parse(bad)


def test_arrangement_validation():
    with pytest.raises(DuplicateLine):
        rational_arrangement([(1, 0, 0), (2, 0, 0)])
    with pytest.raises(ArrangementError):
        rational_arrangement([(1, 0, 0)])
    with pytest.raises(ArrangementError):
        Arrangement(QQ, (line(QQ, 1, 0, 0), line(finite_field(3), 0, 1, 0)))


def test_points_per_line_sum(corpus):
    for _, arr, inc in corpus.values():
        per_line = [len(p) for p in inc.points_on_lines()]
        assert all(1 <= k <= arr.d - 1 for k in per_line)
        assert sum(per_line) == inc.tvector().moment(1)


def _groups(pairs):
    return sorted((p.key, tuple(sorted(s))) for p, s in pairs)


def test_brute_force_oracle_small(corpus):
    checked = 0
    for label, (_, arr, inc) in corpus.items():
        if arr.d > 8:
            continue
        assert _groups(brute_force_points(arr)) == _groups(zip(inc.points, inc.incidence)), label
        checked += 1
    assert checked >= 10


def _random_projectivity(field, rng):
    while True:
        try:
            return Projectivity([[field(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)])
        except GeometryError:
            continue


@pytest.mark.parametrize("label", ["quadrilateral", "polygon-4", "dual-hesse", "pg-3", "general-6", "ceva-4"])
def test_tvector_invariant_under_projectivities(corpus, label):
    _, arr, inc = corpus[label]
    rng = random.Random(label)
    for _ in range(20):
        t = _random_projectivity(arr.field, rng)
        moved = Arrangement(arr.field, tuple(apply_line(t, l) for l in arr.lines))
        assert compute_incidence(moved).tvector() == inc.tvector()
