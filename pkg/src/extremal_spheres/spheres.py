"""Exact circumspheres and the strict empty/full classification of
neighboring spheres over the boundary ridges of a simplicial polytope.

A neighboring sphere passes through the d+1 vertices of two boundary
facets sharing a (d-2)-face.  Classification is by strict comparison of
squared distances only: a tie means non-generic input (or a bug) and is
always raised, never resolved by convention.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .delaunay import Triangulation
from .ears import boundary_facets
from .errors import DegenerateSimplex, GenericityViolation
from .exactnum import Scalar, Vector, det, mpq, norm_sq, sub


@dataclass(frozen=True)
class Sphere:
    center: Vector
    radius_sq: Scalar


class SphereClass(enum.Enum):
    EMPTY = "empty"
    FULL = "full"
    NEITHER = "neither"


@dataclass(frozen=True)
class RidgeRecord:
    ridge: Tuple[int, ...]
    facet_pair: Tuple[Tuple[int, ...], Tuple[int, ...]]
    vertex_ids: Tuple[int, ...]
    sphere: Sphere
    sphere_class: SphereClass


@dataclass(frozen=True)
class RidgeSphereCensus:
    records: Tuple[RidgeRecord, ...]
    empty_count: int
    full_count: int
    neither_count: int


def circumsphere(vertices: Sequence[Vector]) -> Sphere:
    """Unique sphere through d+1 affinely independent points in dimension d,
    solved exactly from the equidistance linear system by Cramer's rule."""
    vertices = [tuple(v) for v in vertices]
    d = len(vertices[0])
    if len(vertices) != d + 1:
        raise DegenerateSimplex(
            f"circumsphere needs {d + 1} points in dimension {d}, got {len(vertices)}"
        )
    v0 = vertices[0]
    n0 = norm_sq(v0)
    rows = [[2 * c for c in sub(v, v0)] for v in vertices[1:]]
    rhs = [norm_sq(v) - n0 for v in vertices[1:]]
    denom = det(rows)
    if denom == 0:
        raise DegenerateSimplex("circumsphere of an affinely dependent simplex")
    center = []
    for j in range(d):
        col_swapped = [row[:j] + [b] + row[j + 1 :] for row, b in zip(rows, rhs)]
        center.append(det(col_swapped) / denom)
    center = tuple(center)
    return Sphere(center=center, radius_sq=norm_sq(sub(v0, center)))


def classify_sphere(
    s: Sphere, defining_ids: Sequence[int], points: Sequence[Vector]
) -> SphereClass:
    """EMPTY if every non-defining point is strictly outside, FULL if every
    one is strictly inside, NEITHER otherwise; a point exactly on the
    sphere is a genericity violation."""
    defining = set(defining_ids)
    inside = outside = 0
    for idx, p in enumerate(points):
        if idx in defining:
            continue
        diff = norm_sq(sub(p, s.center)) - s.radius_sq
        if diff > 0:
            outside += 1
        elif diff < 0:
            inside += 1
        else:
            raise GenericityViolation(
                f"point {idx} lies exactly on the sphere through {sorted(defining)}",
                vertex_ids=tuple(sorted(defining)) + (idx,),
            )
    if inside == 0:
        return SphereClass.EMPTY
    if outside == 0:
        return SphereClass.FULL
    return SphereClass.NEITHER


def neighboring_sphere_census(
    points: Sequence[Vector], d: int, dt: Triangulation, udt: Triangulation
) -> RidgeSphereCensus:
    """Classify the neighboring sphere of every boundary ridge of P.

    The boundary complex is derived from DT's boundary faces so that the
    census and the triangulations share one representation; UDT is accepted
    for interface symmetry and as the same-boundary cross-check.
    """
    points = tuple(tuple(p) for p in points)
    b_dt = boundary_facets(dt)
    b_udt = boundary_facets(udt)
    if b_dt != b_udt:
        raise GenericityViolation(
            "DT and UDT disagree on the boundary complex; input is degenerate"
        )
    ridge_incidence: Dict[Tuple[int, ...], list] = {}
    for facet in sorted(b_dt):
        for omit in range(len(facet)):
            ridge = facet[:omit] + facet[omit + 1 :]
            ridge_incidence.setdefault(ridge, []).append(facet)
    records = []
    counts = {SphereClass.EMPTY: 0, SphereClass.FULL: 0, SphereClass.NEITHER: 0}
    for ridge in sorted(ridge_incidence):
        facets = ridge_incidence[ridge]
        if len(facets) != 2:
            raise GenericityViolation(
                f"boundary ridge {ridge} shared by {len(facets)} facets",
                vertex_ids=ridge,
            )
        union_ids = tuple(sorted(set(facets[0]) | set(facets[1])))
        if len(union_ids) != d + 1:
            raise GenericityViolation(
                f"facet pair at ridge {ridge} spans {len(union_ids)} vertices,"
                f" expected {d + 1}",
                vertex_ids=union_ids,
            )
        try:
            sphere = circumsphere([points[i] for i in union_ids])
        except DegenerateSimplex as exc:
            raise GenericityViolation(
                f"affinely dependent neighboring-sphere vertices {union_ids}",
                vertex_ids=union_ids,
            ) from exc
        cls = classify_sphere(sphere, union_ids, points)
        counts[cls] += 1
        records.append(
            RidgeRecord(
                ridge=ridge,
                facet_pair=(facets[0], facets[1]),
                vertex_ids=union_ids,
                sphere=sphere,
                sphere_class=cls,
            )
        )
    return RidgeSphereCensus(
        records=tuple(records),
        empty_count=counts[SphereClass.EMPTY],
        full_count=counts[SphereClass.FULL],
        neither_count=counts[SphereClass.NEITHER],
    )
