import random
from fractions import Fraction

import pytest

from gridcross.errors import ValidationError
from gridcross.geom import (
    CrossKind,
    gcd_reduce,
    interior_lattice_points,
    point_on_open_segment,
    segments_cross,
)


def test_gcd_reduce_examples():
    assert gcd_reduce(((0, 0, 0), (4, 6, 2))) == ((2, 3, 1), 2)
    assert gcd_reduce(((1, 1), (2, 3))) == ((1, 2), 1)
    assert gcd_reduce(((0, 0), (0, 5))) == ((0, 1), 5)


def test_gcd_reduce_rejects_degenerate():
    with pytest.raises(ValidationError):
        gcd_reduce(((1, 1), (1, 1)))
    with pytest.raises(ValidationError):
        gcd_reduce(((1, 1), (1, 1, 1)))


def test_interior_lattice_points_examples():
    assert interior_lattice_points(((1, 1), (4, 7))) == [(2, 3), (3, 5)]
    assert interior_lattice_points(((1, 1, 1), (2, 3, 4))) == []
    assert interior_lattice_points(((0, 0), (0, 3))) == [(0, 1), (0, 2)]


def test_interior_point_count_matches_gcd():
    rng = random.Random(7)
    for _ in range(300):
        dim = rng.randint(1, 5)
        a = tuple(rng.randint(-9, 9) for _ in range(dim))
        b = tuple(rng.randint(-9, 9) for _ in range(dim))
        if a == b:
            continue
        _, g = gcd_reduce((a, b))
        pts = interior_lattice_points((a, b))
        assert len(pts) == g - 1
        for p in pts:
            assert point_on_open_segment(p, (a, b))


def test_point_on_open_segment_examples():
    assert point_on_open_segment((1, 1), ((0, 0), (2, 2)))
    assert not point_on_open_segment((2, 2), ((0, 0), (2, 2)))
    assert not point_on_open_segment((1, 2), ((0, 0), (2, 2)))


def test_point_on_open_segment_rational():
    assert point_on_open_segment((Fraction(1, 2), Fraction(1, 2)), ((0, 0), (1, 1)))
    assert not point_on_open_segment((Fraction(1, 2), Fraction(1, 3)), ((0, 0), (1, 1)))


def test_segments_cross_examples():
    res = segments_cross(((0, 0, 0), (2, 2, 0)), ((0, 2, 0), (2, 0, 0)))
    assert res.kind == CrossKind.POINT_CROSS
    assert res.point == (1, 1, 0)

    res = segments_cross(((0, 0), (1, 1)), ((1, 1), (2, 0)))
    assert res.kind == CrossKind.SHARED_ENDPOINT

    res = segments_cross(((0, 0), (3, 0)), ((1, 0), (4, 0)))
    assert res.kind == CrossKind.COLLINEAR_OVERLAP


def test_segments_cross_more_cases():
    # parallel but not collinear
    assert segments_cross(((0, 0), (2, 0)), ((0, 1), (2, 1))).kind == CrossKind.DISJOINT
    # collinear, touching at one shared endpoint
    assert segments_cross(((0, 0), (2, 0)), ((2, 0), (4, 0))).kind == CrossKind.SHARED_ENDPOINT
    # collinear, separated
    assert segments_cross(((0, 0), (1, 0)), ((3, 0), (4, 0))).kind == CrossKind.DISJOINT
    # skew in 3-d: supports do not meet
    assert segments_cross(((0, 0, 0), (1, 1, 0)), ((0, 1, 1), (1, 0, 2))).kind == CrossKind.DISJOINT
    # crossing at a non-midpoint rational parameter
    res = segments_cross(((0, 0), (4, 2)), ((1, 2), (3, -2)))
    assert res.kind == CrossKind.POINT_CROSS
    # one-dimensional segments
    assert segments_cross(((0,), (2,)), ((1,), (3,))).kind == CrossKind.COLLINEAR_OVERLAP
    assert segments_cross(((0,), (1,)), ((1,), (2,))).kind == CrossKind.SHARED_ENDPOINT


def test_segments_cross_dimension_mismatch():
    with pytest.raises(ValidationError):
        segments_cross(((0, 0), (1, 1)), ((0, 0, 0), (1, 1, 1)))


def _random_segment(rng, dim, lo=-6, hi=6):
    while True:
        a = tuple(rng.randint(lo, hi) for _ in range(dim))
        b = tuple(rng.randint(lo, hi) for _ in range(dim))
        if a != b:
            return (a, b)


def test_cross_classification_symmetric():
    rng = random.Random(11)
    for _ in range(600):
        dim = rng.choice([2, 3, 4, 5])
        s1 = _random_segment(rng, dim)
        s2 = _random_segment(rng, dim)
        r12 = segments_cross(s1, s2)
        r21 = segments_cross(s2, s1)
        assert r12.kind == r21.kind
        if r12.kind == CrossKind.POINT_CROSS:
            assert r12.point == r21.point


def test_point_cross_point_lies_on_both():
    rng = random.Random(13)
    hits = 0
    for _ in range(800):
        dim = rng.choice([2, 3])
        s1 = _random_segment(rng, dim, -4, 4)
        s2 = _random_segment(rng, dim, -4, 4)
        res = segments_cross(s1, s2)
        if res.kind == CrossKind.POINT_CROSS:
            hits += 1
            assert point_on_open_segment(res.point, s1)
            assert point_on_open_segment(res.point, s2)
    assert hits > 20  # the sample actually exercises the crossing branch


def test_classification_invariant_under_scaling():
    rng = random.Random(17)
    for _ in range(300):
        dim = rng.choice([2, 3, 4])
        s1 = _random_segment(rng, dim)
        s2 = _random_segment(rng, dim)
        base = segments_cross(s1, s2)
        for scale in (2, 5, 1000):
            t1 = tuple(tuple(scale * x for x in p) for p in s1)
            t2 = tuple(tuple(scale * x for x in p) for p in s2)
            res = segments_cross(t1, t2)
            assert res.kind == base.kind
            if base.kind == CrossKind.POINT_CROSS:
                assert res.point == tuple(scale * x for x in base.point)
