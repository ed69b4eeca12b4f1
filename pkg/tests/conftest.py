"""Shared generators and brute-force oracles for the test suite.

The oracles recompute results by definitions only (exhaustive in_sphere
enumeration, independent hull runs) so the library's fast paths are always
checked against something slower and simpler.
"""

from itertools import combinations

from extremal_spheres import TrialConfig, gen_polytope, in_sphere, orient


def polygon_instance(n, seed):
    """Generic convex polygon vertices in boundary order."""
    return gen_polytope(TrialConfig(d=2, n=(n, n), seed=seed, trials=1), 0)


def spherical_instance(d, n, seed):
    """Generic convex polytope vertices near the unit sphere, d >= 3."""
    return gen_polytope(TrialConfig(d=d, n=(n, n), seed=seed, trials=1), 0)


def brute_delaunay(points, d):
    """(DT, UDT) simplex sets by exhaustive circumsphere testing of every
    (d+1)-subset against every remaining point."""
    n = len(points)
    dt, udt = set(), set()
    for ids in combinations(range(n), d + 1):
        simplex = [points[i] for i in ids]
        if orient(simplex) == 0:
            continue
        signs = {in_sphere(simplex, points[j]) for j in range(n) if j not in ids}
        if signs <= {-1}:
            dt.add(ids)
        elif signs <= {1}:
            udt.add(ids)
    return frozenset(dt), frozenset(udt)


def brute_census2d(polygon):
    """All six census counts of a generic convex polygon by classifying
    every vertex triple's circle directly."""
    n = len(polygon)
    counts = {"s-": 0, "t-": 0, "u-": 0, "s+": 0, "t+": 0, "u+": 0}
    for ids in combinations(range(n), 3):
        simplex = [polygon[i] for i in ids]
        signs = [in_sphere(simplex, polygon[j]) for j in range(n) if j not in ids]
        if all(s < 0 for s in signs):
            side = "-"
        elif all(s > 0 for s in signs):
            side = "+"
        else:
            continue
        edges = sum(
            1
            for a, b in ((0, 1), (1, 2), (0, 2))
            if (ids[b] - ids[a]) % n in (1, n - 1)
        )
        counts[{2: "s", 1: "u", 0: "t"}[edges] + side] += 1
    return counts
