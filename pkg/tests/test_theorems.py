import random
from itertools import permutations

import pytest

from linarr.exactfield import finite_field
from linarr.families import FamilySpec, generate, generate_with_incidence
from linarr.incidence import Arrangement
from linarr.projgeom import join, line, meet, point
from linarr.theorems import (
    NoZeroDiagonal,
    NotProjectivePlane,
    TrivialInput,
    _Plane,
    dbe_verify,
    max_bipartite_matching,
    parse_matrix,
    reconstruct_field,
    zero_diagonal_permutation,
)

PG = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}


def _inc(name, params=()):
    return generate_with_incidence(FamilySpec(name, params))[1]


def test_dbe_examples():
    r = dbe_verify(_inc("pg", (2, 1)))
    assert (r.r, r.d, r.equality, r.q, r.ok) == (7, 7, "FiniteProjectivePlane", 2, True)
    r = dbe_verify(_inc("near-pencil", (6,)))
    assert (r.r, r.d, r.equality, r.ok) == (6, 6, "QuasiTrivial", True)
    r = dbe_verify(_inc("dual-hesse"))
    assert (r.r, r.d, r.equality, r.inequality_ok) == (12, 9, None, True)
    with pytest.raises(TrivialInput):
        dbe_verify(_inc("pencil", (5,)))


def test_dbe_biconditional_on_corpus(corpus):
    for label, (spec, arr, inc) in corpus.items():
        if spec.name == "pencil":
            continue
        r = dbe_verify(inc)
        assert r.inequality_ok and r.ok, label
        expected = {"near-pencil": "QuasiTrivial", "pg": "FiniteProjectivePlane"}.get(spec.name)
        assert r.equality == expected, label


def test_zero_diagonal_examples():
    assert zero_diagonal_permutation([[0, 1], [1, 0]]) == [0, 1]
    with pytest.raises(NoZeroDiagonal):
        zero_diagonal_permutation([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        zero_diagonal_permutation([[0, 1, 0]])


@pytest.mark.parametrize("q", sorted(PG))
def test_zero_diagonal_on_pg(q):
    m = _inc("pg", PG[q]).matrix()
    sigma = zero_diagonal_permutation(m)
    assert sorted(sigma) == list(range(len(m)))
    assert all(m[sigma[i]][i] == 0 for i in range(len(m)))


def test_matching_against_brute_force():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        m = [[rng.random() < 0.6 for _ in range(n)] for _ in range(n)]
        exists = any(all(not m[s[i]][i] for i in range(n)) for s in permutations(range(n)))
        try:
            sigma = zero_diagonal_permutation(m)
        except NoZeroDiagonal:
            assert not exists
        else:
            assert exists and all(not m[sigma[i]][i] for i in range(n))


def test_max_matching_partial():
    assert max_bipartite_matching([[0], [0], [1]], 2) in ([0, -1, 1], [-1, 0, 1])


def test_parse_matrix():
    assert parse_matrix("matrix 2 3\n1 0 1\n0 1 1\n") == [[1, 0, 1], [0, 1, 1]]
    for bad in ("", "matrix 2 2\n1 0\n", "matrix 1 2\n1 2\n", "mat 1 1\n0\n"):
        with pytest.raises(ValueError):
            parse_matrix(bad)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_reconstruct_pg(q):
    arr, inc = generate_with_incidence(FamilySpec("pg", PG[q]))
    rf = reconstruct_field(arr, inc)
    assert rf.is_field and rf.matched_order and rf.matches_ambient
    assert rf.q == q == len(rf.elements)


def test_reconstruct_rejects_non_planes():
    with pytest.raises(NotProjectivePlane):
        reconstruct_field(generate(FamilySpec("dual-hesse", ())))
    with pytest.raises(NotProjectivePlane):
        reconstruct_field(generate(FamilySpec("near-pencil", (5,))))


def _subplane(p, k, sub_k):
    """PG(2, p^sub_k) written over GF(p, k) through the subfield embedding."""
    big = finite_field(p, k)
    q = p**sub_k
    sub = [e for e in big.elements() if e**q == e]
    z, o = big.zero, big.one
    lines = [line(big, z, z, o)] + [line(big, z, o, a) for a in sub] + [line(big, o, a, b) for a in sub for b in sub]
    return Arrangement(big, tuple(lines), f"PG(2,{q}) in GF({p},{k})")


@pytest.mark.parametrize("p, k, sub_k", [(2, 2, 1), (3, 2, 1), (2, 4, 2), (2, 3, 1)])
def test_reconstruct_subfield(p, k, sub_k):
    arr = _subplane(p, k, sub_k)
    rf = reconstruct_field(arr)
    assert rf.q == p**sub_k
    assert rf.is_field and rf.matched_order and rf.matches_ambient


def test_chain_identities_hold_as_geometry():
    # [1,c,0] v [0,1,1] meets {x=z} at [1,c+1,1]; [1,c,0] v [1,0,1] meets {x=0} at [0,-c,1]
    f = finite_field(5)
    plane = _Plane(f, [point(f, *c) for c in _all_points(f)])
    for c in f.elements():
        p = meet(join(point(f, 1, c, 0), point(f, 0, 1, 1)), line(f, 1, 0, -1))
        assert p == point(f, 1, c + 1, 1)
        p = meet(join(point(f, 1, c, 0), point(f, 1, 0, 1)), line(f, 1, 0, 0))
        assert p == point(f, 0, -c, 1)
        assert plane.neg(c) == -c and plane.succ(c) == c + 1
        for b in f.elements():
            assert plane.mul(c, b) == c * b


def _all_points(f):
    els = f.elements()
    yield (0, 0, 1)
    for a in els:
        yield (f.zero, f.one, a)
    for a in els:
        for b in els:
            yield (f.one, a, b)
