import random
from fractions import Fraction
from math import gcd

import pytest

from cslplane.errors import DomainError
from cslplane.exact import (
    Mat2Q,
    Mat2Z,
    denominator,
    hnf2,
    intersect_integer_lattices,
    xgcd,
)


def lattice_points_in_box(basis: Mat2Z, radius: int) -> set:
    """Independent membership oracle: integer points of the column
    lattice inside a coordinate box, decided by exact linear solve."""
    inv = basis.to_q().inverse()
    points = set()
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            u, v = inv.apply((x, y))
            if u.denominator == 1 and v.denominator == 1:
                points.add((x, y))
    return points


def assert_hnf_shape(h: Mat2Z):
    assert h.m12 == 0
    assert h.m11 > 0
    assert h.m22 > 0
    assert 0 <= h.m21 < h.m22


def test_xgcd_bezout():
    for a in range(-12, 13):
        for b in range(-12, 13):
            g, x, y = xgcd(a, b)
            assert g == a * x + b * y
            assert g >= 0


def test_hnf_identity():
    h, u = hnf2(Mat2Z.identity())
    assert h == Mat2Z.identity()
    assert u == Mat2Z.identity()


def test_hnf_already_diagonal():
    h, _ = hnf2(Mat2Z(2, 0, 0, 3))
    assert h == Mat2Z(2, 0, 0, 3)


def test_hnf_upper_triangular_example():
    m = Mat2Z(2, 1, 0, 1)
    h, u = hnf2(m)
    assert h == Mat2Z(1, 0, 1, 2)
    assert m @ u == h
    assert abs(u.det()) == 1
    # both bases generate the same set of integer vectors
    assert lattice_points_in_box(m, 5) == lattice_points_in_box(h, 5)


def test_hnf_singular_rejected():
    with pytest.raises(DomainError):
        hnf2(Mat2Z(1, 2, 2, 4))


@pytest.mark.parametrize("seed", range(6))
def test_hnf_random_properties(seed):
    rng = random.Random(seed)
    for _ in range(60):
        m = Mat2Z(*(rng.randint(-30, 30) for _ in range(4)))
        if m.det() == 0:
            continue
        h, u = hnf2(m)
        assert_hnf_shape(h)
        assert m @ u == h
        assert abs(u.det()) == 1
        assert abs(h.det()) == abs(m.det())
        # canonicity: a second pass reproduces H unchanged
        h2, _ = hnf2(h)
        assert h2 == h


def test_intersect_identity_with_identity():
    assert intersect_integer_lattices(
        Mat2Z.identity(), Mat2Z.identity()
    ) == Mat2Z.identity()


def test_intersect_with_scaled_copy():
    assert intersect_integer_lattices(
        Mat2Z.identity(), Mat2Z.scaled_identity(2)
    ) == Mat2Z.scaled_identity(2)


def test_intersect_checkerboard():
    # brute-force membership over |coords| <= 4 shows the intersection
    # of Z^2 with the (1,1),(1,-1) lattice is the even-sum sublattice
    b = Mat2Z(1, 1, 1, -1)
    c = intersect_integer_lattices(Mat2Z.identity(), b)
    assert c == Mat2Z(1, 0, 1, 2)
    expected = {
        (x, y)
        for x in range(-4, 5)
        for y in range(-4, 5)
        if (x + y) % 2 == 0
    }
    assert lattice_points_in_box(c, 4) == expected


def test_intersect_singular_rejected():
    with pytest.raises(DomainError):
        intersect_integer_lattices(Mat2Z(1, 1, 1, 1), Mat2Z.identity())


@pytest.mark.parametrize("seed", range(4))
def test_intersect_random_properties(seed):
    rng = random.Random(100 + seed)
    for _ in range(25):
        a = Mat2Z(*(rng.randint(-6, 6) for _ in range(4)))
        b = Mat2Z(*(rng.randint(-6, 6) for _ in range(4)))
        if a.det() == 0 or b.det() == 0:
            continue
        c = intersect_integer_lattices(a, b)
        assert_hnf_shape(c)
        # symmetric as HNF matrices
        assert intersect_integer_lattices(b, a) == c
        # the intersection is exactly the common points
        common = lattice_points_in_box(a, 6) & lattice_points_in_box(b, 6)
        assert lattice_points_in_box(c, 6) == common
        # index divisibility against both sublattice indices
        da, db, dc = abs(a.det()), abs(b.det()), abs(c.det())
        lcm = da * db // gcd(da, db)
        assert dc % lcm == 0


def test_denominator_examples():
    assert denominator(Mat2Q.identity()) == 1
    assert denominator(
        Mat2Q(Fraction(3, 5), Fraction(4, 5), Fraction(-4, 5), Fraction(3, 5))
    ) == 5
    assert denominator(
        Mat2Q(Fraction(1, 3), Fraction(4, 3), Fraction(-2, 3), Fraction(1, 3))
    ) == 3


@pytest.mark.parametrize("seed", range(4))
def test_denominator_minimality(seed):
    rng = random.Random(200 + seed)
    for _ in range(50):
        d = rng.randint(1, 40)
        entries = [rng.randint(-30, 30) for _ in range(3)] + [1]
        rng.shuffle(entries)
        m = Mat2Z(*entries).to_q().scale(Fraction(1, d))
        den = denominator(m)
        # the 1 entry forces full recovery of d
        assert den == d
        assert m.scale(den).is_integral()
        for p in {2, 3, 5, 7, 11, 13}:
            if den % p == 0:
                assert not m.scale(den // p).is_integral()


def test_mat2z_requires_ints():
    with pytest.raises(TypeError):
        Mat2Z(1, 0, 0, Fraction(1, 2))


def test_mat2q_inverse_and_apply():
    m = Mat2Q(1, 2, 3, 4)
    assert m @ m.inverse() == Mat2Q.identity()
    assert m.apply((1, 0)) == (1, 3)
    with pytest.raises(DomainError):
        Mat2Q(1, 2, 2, 4).inverse()
