import random

import pytest

from severi.exceptions import SurfaceMismatchError
from severi.lattice import (
    DivisorClass,
    Eligibility,
    Surface,
    TangencyTuple,
    canonical,
    decompositions,
    eligibility,
    intersect,
    pa,
    parse_class,
    parse_surface,
    r0,
    r0_tangential,
    r_dim,
)

P2 = Surface.plane()
Q = Surface.quadric()
F2 = Surface.hirzebruch(2)
F3 = Surface.hirzebruch(3)


def _random_class(rng, s):
    return s.cls(*(rng.randint(-10, 10) for _ in range(s.rank)))


def test_parse_surface_tags():
    assert parse_surface("p2") == P2
    assert parse_surface("Q") == Q
    assert parse_surface("f7") == Surface.hirzebruch(7)
    with pytest.raises(SurfaceMismatchError):
        parse_surface("f0")
    with pytest.raises(SurfaceMismatchError):
        parse_surface("p3")


def test_parse_class_and_str():
    d = parse_class(F2, "2,1")
    assert d == 2 * F2.C + F2.F
    assert str(d) == "2C+F"
    assert str(F2.E) == "C-2F"
    assert str(parse_class(Q, "2, 3")) == "(2,3)"
    assert str(parse_class(P2, "4")) == "4"
    with pytest.raises(SurfaceMismatchError):
        parse_class(F2, "1")
    with pytest.raises(SurfaceMismatchError):
        parse_class(Q, "a,b")


def test_mixing_surfaces_is_rejected():
    with pytest.raises(SurfaceMismatchError):
        F2.C + F3.C
    with pytest.raises(SurfaceMismatchError):
        intersect(F2.C, F3.F)


def test_hirzebruch_intersections():
    for n in range(1, 6):
        s = Surface.hirzebruch(n)
        assert intersect(s.C, s.C) == n
        assert intersect(s.C, s.F) == 1
        assert intersect(s.F, s.F) == 0
        assert intersect(s.E, s.E) == -n
        assert intersect(s.E, s.C) == 0
        assert canonical(s) == s.cls(-2, n - 2)


def test_genus_and_dimension_examples():
    assert pa(P2.cls(3)) == 1
    assert r0(P2.cls(3)) == 8
    assert r0(Q.cls(2, 2)) == 7
    assert pa(2 * F2.C) == 1
    assert r0(2 * F2.C) == 7
    assert pa(F2.C) == 0


def test_r0_tangential():
    d = F3.C + 3 * F3.F
    assert r0_tangential(d, 1) == r0(d)
    assert r0_tangential(d, 3) == r0(d) - 2
    assert r0_tangential(d, TangencyTuple((2, 2))) == r0(d) - 2
    with pytest.raises(ValueError):
        TangencyTuple((0, 1))


@pytest.mark.parametrize("s", [P2, Q, F2, F3, Surface.hirzebruch(5)])
def test_intersection_is_symmetric_bilinear(s):
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (_random_class(rng, s) for _ in range(3))
        k = rng.randint(-3, 3)
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
        assert intersect(k * a, b) == k * intersect(a, b)


@pytest.mark.parametrize("s", [P2, Q, F2, F3, Surface.hirzebruch(4)])
def test_adjunction_on_random_pairs(s):
    rng = random.Random(2024)
    for _ in range(1000):
        d1, d2 = _random_class(rng, s), _random_class(rng, s)
        assert pa(d1 + d2) == pa(d1) + pa(d2) + intersect(d1, d2) - 1
        assert r0(d1 + d2) == r0(d1) + r0(d2) + 1


def test_eligibility_on_f2():
    assert eligibility(F2.E) is Eligibility.EXCLUDED
    assert eligibility(F2.F) is Eligibility.SEED1
    assert eligibility(F2.C) is Eligibility.SEED1
    assert eligibility(F2.C + F2.F) is Eligibility.SEED1
    assert eligibility(2 * F2.C) is Eligibility.RECURSE
    assert eligibility(2 * F2.F) is Eligibility.ZERO
    assert eligibility(F2.zero) is Eligibility.ZERO


def test_eligibility_plane_and_quadric():
    assert eligibility(P2.cls(1)) is Eligibility.SEED1
    assert eligibility(P2.cls(2)) is Eligibility.RECURSE
    assert eligibility(P2.cls(0)) is Eligibility.ZERO
    assert eligibility(Q.cls(1, 0)) is Eligibility.SEED1
    assert eligibility(Q.cls(1, 1)) is Eligibility.SEED1
    assert eligibility(Q.cls(2, 2)) is Eligibility.RECURSE
    assert eligibility(Q.cls(2, 0)) is Eligibility.ZERO


def test_decompositions_examples():
    assert decompositions(2 * F2.C, 2) == [(F2.C, F2.C)]
    assert sorted(decompositions(P2.cls(3), 2), key=str) == sorted(
        [(P2.cls(1), P2.cls(2)), (P2.cls(2), P2.cls(1))], key=str)
    with pytest.raises(ValueError):
        decompositions(2 * F2.C, 1)


@pytest.mark.parametrize("d", [F2.cls(3, 2), F3.cls(2, 4), Q.cls(3, 3), P2.cls(6)])
def test_decompositions_closed_under_reversal(d):
    pairs = decompositions(d, 2)
    assert pairs
    assert set(pairs) == {(b, a) for a, b in pairs}
    for parts in pairs + decompositions(d, 3):
        assert sum(parts[1:], parts[0]) == d
        assert all(eligibility(p) in (Eligibility.SEED1, Eligibility.RECURSE) for p in parts)


def test_decompositions_never_use_the_negative_curve():
    for s in (F2, F3):
        d = 3 * s.C + 2 * s.F
        for t in (2, 3):
            assert all(s.E not in parts for parts in decompositions(d, t))


def test_round_trip_dict():
    d = F3.cls(2, 1)
    assert DivisorClass.from_dict(d.to_dict()) == d


def test_full_linear_series_dimension():
    for n in range(1, 6):
        s = Surface.hirzebruch(n)
        assert r_dim(2 * s.C) == 3 * n + 2
    for d in range(1, 10):
        assert r_dim(P2.cls(d)) == d * (d + 3) // 2
    assert r_dim(F2.C + F2.F) == 5


def test_decompositions_through_the_negative_curve():
    rest = 2 * F2.C - F2.E
    assert rest == F2.C + 2 * F2.F
    assert eligibility(rest) is Eligibility.SEED1
    assert set(decompositions(rest, 2)) == {(F2.F, F2.C + F2.F), (F2.C + F2.F, F2.F)}
    assert decompositions(F2.F, 2) == []
