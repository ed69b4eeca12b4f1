"""Convex hull construction, validation oracle, and invariants."""

import random
from dataclasses import replace

import pytest

from conftest import polygon_instance, spherical_instance
from extremal_spheres import (
    GenericityViolation,
    HullComplex,
    InputError,
    NotInConvexPosition,
    convex_hull,
    hull_volume,
    validate_complex,
)
from extremal_spheres.exactnum import vec
from extremal_spheres.hull import Facet, complex_diagnostics

SQUARE = [vec(0, 0), vec(2, 0), vec(2, 2), vec(0, 2)]


def test_square_hull():
    h = convex_hull(SQUARE, 2)
    assert len(h.facets) == 4
    # every ridge (a vertex in d=2) lies in exactly two edges
    assert len(h.ridge_adjacency) == 4
    assert all(len(pair) == 2 for pair in h.ridge_adjacency.values())
    assert validate_complex(h)


def test_simplex_hull_3d():
    pts = [vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)]
    h = convex_hull(pts, 3)
    assert len(h.facets) == 4
    assert validate_complex(h)


def test_interior_point_rejected():
    with pytest.raises(NotInConvexPosition) as err:
        convex_hull(SQUARE + [vec(1, 1)], 2)
    assert err.value.point_id == 4


def test_point_on_facet_hyperplane_rejected():
    with pytest.raises(GenericityViolation):
        convex_hull(SQUARE + [vec(1, 0)], 2)


def test_affine_degeneracy_rejected():
    with pytest.raises(InputError):
        convex_hull([vec(0, 0), vec(1, 1), vec(2, 2), vec(3, 3)], 2)
    with pytest.raises(InputError):
        convex_hull([vec(0, 0), vec(1, 0)], 2)


def test_outward_normals():
    h = convex_hull(SQUARE, 2)
    for f in h.facets:
        for p in h.points:
            assert sum(a * b for a, b in zip(f.normal, p)) <= f.offset


def test_validate_complex_on_valid_hulls():
    for seed in range(3):
        pts = polygon_instance(9, seed=40 + seed)
        assert validate_complex(convex_hull(pts, 2, seed=seed))
    assert validate_complex(convex_hull(spherical_instance(3, 9, seed=5), 3))


def test_validate_complex_flipped_normal():
    h = convex_hull(SQUARE, 2)
    bad_facet = replace(
        h.facets[0],
        normal=tuple(-c for c in h.facets[0].normal),
        offset=-h.facets[0].offset,
    )
    bad = HullComplex(
        ambient_dim=h.ambient_dim,
        points=h.points,
        facets=(bad_facet,) + h.facets[1:],
        ridge_adjacency=h.ridge_adjacency,
    )
    assert not validate_complex(bad)
    assert complex_diagnostics(bad)


def test_validate_complex_deleted_ridge():
    h = convex_hull(SQUARE, 2)
    adjacency = dict(h.ridge_adjacency)
    adjacency.pop(next(iter(adjacency)))
    bad = HullComplex(
        ambient_dim=h.ambient_dim,
        points=h.points,
        facets=h.facets,
        ridge_adjacency=adjacency,
    )
    assert not validate_complex(bad)


def test_validate_complex_swallowed_point():
    h = convex_hull(SQUARE, 2)
    bad = HullComplex(
        ambient_dim=2,
        points=h.points + (vec(1, 1),),
        facets=h.facets,
        ridge_adjacency=h.ridge_adjacency,
    )
    assert not validate_complex(bad)


@pytest.mark.parametrize("n", [5, 8, 13])
def test_polygon_facet_count_equals_n(n):
    pts = polygon_instance(n, seed=n)
    h = convex_hull(pts, 2)
    assert len(h.facets) == n


@pytest.mark.parametrize("n", [6, 9, 12])
def test_euler_relation_3d(n):
    pts = spherical_instance(3, n, seed=n)
    h = convex_hull(pts, 3)
    v = len({i for f in h.facets for i in f.vertex_ids})
    e = len(h.ridge_adjacency)
    assert v - e + len(h.facets) == 2


def test_volume_invariant_under_permutation():
    pts = list(spherical_instance(3, 8, seed=17))
    base = hull_volume(convex_hull(pts, 3))
    rng = random.Random(3)
    for _ in range(5):
        shuffled = pts[:]
        rng.shuffle(shuffled)
        assert hull_volume(convex_hull(shuffled, 3)) == base


def test_facet_set_independent_of_insertion_order():
    pts = spherical_instance(3, 10, seed=23)
    base = {f.vertex_ids for f in convex_hull(pts, 3, seed=0).facets}
    for seed in range(1, 11):
        again = {f.vertex_ids for f in convex_hull(pts, 3, seed=seed).facets}
        assert again == base
