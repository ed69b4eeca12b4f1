"""The 2D census of extremal circles and the curvature-radii extrema count
for generic convex polygons.

Vertices must be supplied in boundary order; the module verifies convex
position and consistent orientation instead of sorting them itself, so a
caller passing a scrambled polygon fails loudly.  All radii comparisons
use squared circumradii, which preserves every order statement exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .delaunay import check_generic, delaunay_triangulations
from .errors import GenericityViolation, InputError, NotInConvexPosition
from .exactnum import Scalar, Vector, orient
from .spheres import circumsphere


@dataclass(frozen=True)
class Census2D:
    """Counts of empty (minus) and full (plus) circles through vertex
    triples, split by type: neighboring (3 consecutive vertices), disjoint
    (no two adjacent), intermediate (otherwise)."""

    n: int
    s_minus: int
    t_minus: int
    u_minus: int
    s_plus: int
    t_plus: int
    u_plus: int

    def identities_hold(self) -> bool:
        return (
            self.s_minus - self.t_minus == 2
            and self.s_plus - self.t_plus == 2
            and self.s_minus + self.t_minus + self.u_minus == self.n - 2
            and self.s_plus + self.t_plus + self.u_plus == self.n - 2
            and 2 * self.s_minus + self.u_minus == self.n
            and 2 * self.s_plus + self.u_plus == self.n
        )


@dataclass(frozen=True)
class RadiiReport:
    radii_sq: Tuple[Scalar, ...]  # squared circumradii R_i^2, cyclic
    condition_holds: bool  # every circumcenter inside its vertex angle
    local_min_count: int
    local_max_count: int


def _require_boundary_order(polygon) -> None:
    n = len(polygon)
    if n < 4:
        raise InputError("census needs a polygon with n >= 4 vertices")
    base = orient([polygon[0], polygon[1], polygon[2]])
    if base == 0:
        raise GenericityViolation("three consecutive vertices are collinear")
    for i in range(n):
        s = orient([polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]])
        if s == 0:
            raise GenericityViolation(
                f"collinear consecutive vertices at {i}",
                vertex_ids=(i, (i + 1) % n, (i + 2) % n),
            )
        if s != base:
            raise NotInConvexPosition(
                "vertices are not in convex boundary order", point_id=(i + 1) % n
            )


def _triangle_type(simplex, n) -> str:
    """neighboring / intermediate / disjoint by polygon-edge count."""
    edges = 0
    for a, b in ((0, 1), (1, 2), (0, 2)):
        i, j = simplex[a], simplex[b]
        if (j - i) % n in (1, n - 1):
            edges += 1
    return {2: "s", 1: "u", 0: "t"}[edges]


def census2d(polygon: Sequence[Vector], seed: int = 0) -> Census2D:
    """Classify every empty and full circle of a generic convex polygon.

    Empty circles are circumcircles of Delaunay triangles, full circles of
    upper Delaunay triangles; each triangle is typed by how many of its
    edges are polygon edges.
    """
    polygon = tuple(tuple(p) for p in polygon)
    _require_boundary_order(polygon)
    n = len(polygon)
    report = check_generic(polygon, 2)
    dt, udt = delaunay_triangulations(polygon, 2, seed=seed, generic_report=report)
    counts = {"s-": 0, "t-": 0, "u-": 0, "s+": 0, "t+": 0, "u+": 0}
    for simplex in dt.simplices:
        counts[_triangle_type(simplex, n) + "-"] += 1
    for simplex in udt.simplices:
        counts[_triangle_type(simplex, n) + "+"] += 1
    return Census2D(
        n=n,
        s_minus=counts["s-"],
        t_minus=counts["t-"],
        u_minus=counts["u-"],
        s_plus=counts["s+"],
        t_plus=counts["t+"],
        u_plus=counts["u+"],
    )


def curvature_radii(polygon: Sequence[Vector]) -> RadiiReport:
    """Squared curvature radii R_i^2 (circumradius of the vertex triangle
    A_{i-1} A_i A_{i+1}) with cyclic local extremum counts.

    ``condition_holds`` records whether every circumcenter lies strictly
    inside its vertex angle (two strict orientation tests per vertex); the
    four-extrema bound is only guaranteed under that condition.
    """
    polygon = tuple(tuple(p) for p in polygon)
    _require_boundary_order(polygon)
    n = len(polygon)
    radii_sq = []
    condition = True
    for i in range(n):
        prev_v, cur, nxt = polygon[i - 1], polygon[i], polygon[(i + 1) % n]
        sphere = circumsphere([prev_v, cur, nxt])
        radii_sq.append(sphere.radius_sq)
        center = sphere.center
        # strictly inside the angle at cur: same open side of ray cur->prev
        # as nxt, and same open side of ray cur->nxt as prev
        s1 = orient([cur, prev_v, center])
        s2 = orient([cur, prev_v, nxt])
        s3 = orient([cur, nxt, center])
        s4 = orient([cur, nxt, prev_v])
        if s1 == 0 or s3 == 0 or s1 != s2 or s3 != s4:
            condition = False
    mins = maxs = 0
    for i in range(n):
        left, here, right = radii_sq[i - 1], radii_sq[i], radii_sq[(i + 1) % n]
        if here == left or here == right:
            raise GenericityViolation(
                f"equal adjacent curvature radii at vertex {i}",
                vertex_ids=(i - 1 if i else n - 1, i, (i + 1) % n),
            )
        if here < left and here < right:
            mins += 1
        elif here > left and here > right:
            maxs += 1
    return RadiiReport(
        radii_sq=tuple(radii_sq),
        condition_holds=condition,
        local_min_count=mins,
        local_max_count=maxs,
    )
