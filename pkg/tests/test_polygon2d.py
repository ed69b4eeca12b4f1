"""The 2D circle census and curvature-radii extrema."""

import pytest

from conftest import brute_census2d, polygon_instance
from extremal_spheres import (
    GenericityViolation,
    InputError,
    NotInConvexPosition,
    census2d,
    curvature_radii,
)
from extremal_spheres.exactnum import vec


def test_quadrilateral_census():
    c = census2d([vec(0, 0), vec(3, 0), vec(3, 3), vec(0, 4)])
    assert (c.s_minus, c.t_minus, c.u_minus) == (2, 0, 0)
    assert (c.s_plus, c.t_plus, c.u_plus) == (2, 0, 0)
    assert c.identities_hold()


@pytest.mark.parametrize("n,seed", [(5, 600), (8, 601), (14, 602), (21, 603)])
def test_census_identities(n, seed):
    c = census2d(polygon_instance(n, seed=seed))
    assert c.identities_hold()
    assert c.s_minus >= 2 and c.s_plus >= 2


def test_census_matches_brute_force_hexagons():
    for seed in (604, 605, 606):
        polygon = polygon_instance(6, seed=seed)
        c = census2d(polygon)
        brute = brute_census2d(polygon)
        assert (c.s_minus, c.t_minus, c.u_minus) == (
            brute["s-"],
            brute["t-"],
            brute["u-"],
        )
        assert (c.s_plus, c.t_plus, c.u_plus) == (
            brute["s+"],
            brute["t+"],
            brute["u+"],
        )


def test_census_rejects_scrambled_polygon():
    polygon = list(polygon_instance(7, seed=607))
    polygon[1], polygon[4] = polygon[4], polygon[1]
    with pytest.raises(NotInConvexPosition):
        census2d(polygon)


def test_census_rejects_tiny_input():
    with pytest.raises(InputError):
        census2d([vec(0, 0), vec(1, 0), vec(0, 1)])


def test_census_rejects_collinear_run():
    with pytest.raises(GenericityViolation):
        census2d([vec(0, 0), vec(1, 0), vec(2, 0), vec(2, 2), vec(0, 2)])


def test_curvature_radii_near_regular_pentagon():
    rep = curvature_radii(polygon_instance(5, seed=608))
    assert rep.condition_holds
    assert rep.local_min_count >= 2
    assert rep.local_max_count >= 2


@pytest.mark.parametrize("n,seed", [(6, 609), (11, 610), (17, 611)])
def test_extrema_alternate(n, seed):
    rep = curvature_radii(polygon_instance(n, seed=seed))
    assert len(rep.radii_sq) == n
    # strict cyclic extrema alternate, so minima and maxima balance
    assert rep.local_min_count == rep.local_max_count
    if rep.condition_holds:
        assert rep.local_min_count >= 2


def test_equal_adjacent_radii_rejected():
    # a square's vertex triples all share one circumcircle
    with pytest.raises(GenericityViolation):
        curvature_radii([vec(0, 0), vec(2, 0), vec(2, 2), vec(0, 2)])
