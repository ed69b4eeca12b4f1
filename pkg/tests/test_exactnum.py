"""Exact arithmetic, determinants, and the two sign predicates."""

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_spheres import DegenerateSimplex, InputError, circumsphere
from extremal_spheres.exactnum import (
    det,
    in_sphere,
    mpq,
    norm_sq,
    orient,
    sub,
    to_scalar,
    vec,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
).map(lambda f: mpq(f.numerator, f.denominator))

small_coords = st.integers(min_value=-8, max_value=8).map(mpq)


def test_to_scalar_decimal_is_exact():
    assert to_scalar("0.25") == mpq(1, 4)
    assert to_scalar("1/3") == mpq(1, 3)
    assert to_scalar("-2.5") == mpq(-5, 2)
    assert to_scalar(7) == mpq(7)
    assert to_scalar(Fraction(3, 9)) == mpq(1, 3)


def test_to_scalar_rejects_floats_and_junk():
    with pytest.raises(InputError):
        to_scalar(0.25)
    with pytest.raises(InputError):
        to_scalar("x")
    with pytest.raises(InputError):
        to_scalar("1/0")


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    # canonical form: gcd-reduced, positive denominator
    s = a * b + c
    assert s.denominator > 0


def test_orient_examples():
    assert orient([vec(0, 0), vec(1, 0), vec(0, 1)]) == 1
    assert orient([vec(0, 0), vec(1, 1), vec(2, 2)]) == 0
    assert (
        orient([vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)]) == 1
    )


def test_orient_dimension_mismatch():
    with pytest.raises(InputError):
        orient([vec(0, 0), vec(1, 0)])
    with pytest.raises(InputError):
        orient([vec(0, 0, 0), vec(1, 0), vec(0, 1)])


@given(st.lists(st.tuples(small_coords, small_coords), min_size=3, max_size=3))
def test_orient_antisymmetry_2d(pts):
    base = orient(pts)
    swapped = orient([pts[1], pts[0], pts[2]])
    assert swapped == -base


@given(
    st.lists(
        st.tuples(small_coords, small_coords, small_coords),
        min_size=4,
        max_size=4,
    )
)
def test_orient_antisymmetry_3d(pts):
    assert orient([pts[0], pts[2], pts[1], pts[3]]) == -orient(pts)


def test_in_sphere_examples():
    simplex = [vec(1, 0), vec(0, 1), vec(-1, 0)]
    assert in_sphere(simplex, vec(0, 0)) == 1
    assert in_sphere(simplex, vec(3, 0)) == -1
    assert in_sphere(simplex, vec(0, -1)) == 0


def test_in_sphere_degenerate_simplex():
    with pytest.raises(DegenerateSimplex):
        in_sphere([vec(0, 0), vec(1, 1), vec(2, 2)], vec(0, 1))


def test_in_sphere_permutation_invariance():
    simplex = [vec(1, 0), vec(0, 2), vec(-1, 0)]
    queries = [vec(0, 0), vec(5, 5), vec(0, -1)]
    for q in queries:
        expected = in_sphere(simplex, q)
        for perm in permutations(simplex):
            assert in_sphere(list(perm), q) == expected


def _random_point(rng, d):
    return tuple(mpq(rng.randint(-400, 400), rng.randint(1, 40)) for _ in range(d))


@pytest.mark.parametrize("d", [2, 3])
def test_in_sphere_agrees_with_circumsphere_distance(d):
    # 1000 random rational inputs: predicate sign vs direct distance test
    rng = random.Random(20240 + d)
    done = 0
    while done < 1000:
        simplex = [_random_point(rng, d) for _ in range(d + 1)]
        if orient(simplex) == 0:
            continue
        q = _random_point(rng, d)
        s = circumsphere(simplex)
        direct = s.radius_sq - norm_sq(sub(q, s.center))
        direct_sign = (direct > 0) - (direct < 0)
        assert in_sphere(simplex, q) == direct_sign
        done += 1


def _naive_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = mpq(0)
    for j, x in enumerate(rows[0]):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = x * _naive_det(minor)
        total += term if j % 2 == 0 else -term
    return total


@pytest.mark.parametrize("n", [4, 5, 6])
def test_det_matches_cofactor_expansion(n):
    rng = random.Random(99 + n)
    for _ in range(20):
        rows = [
            [mpq(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)]
            for _ in range(n)
        ]
        assert det(rows) == _naive_det(rows)


def test_det_singular_and_identity():
    eye = [[mpq(int(i == j)) for j in range(5)] for i in range(5)]
    assert det(eye) == 1
    eye[3] = eye[1][:]
    assert det(eye) == 0
    with pytest.raises(InputError):
        det([[mpq(1), mpq(2)]])


@settings(deadline=None)
@given(
    st.lists(
        st.lists(small_coords, min_size=4, max_size=4), min_size=4, max_size=4
    )
)
def test_det_row_swap_flips_sign(rows):
    swapped = [rows[1], rows[0], rows[2], rows[3]]
    assert det(swapped) == -det(rows)
