"""Paraboloid lifting and the Delaunay / upper Delaunay triangulations.

Points are lifted by appending the sum of squared coordinates; facets of
the lifted hull whose outward normal has negative last coordinate project
to the Delaunay triangulation, those with positive last coordinate to the
upper Delaunay triangulation.  Genericity (no d+2 cospherical vertices,
not a simplex, full affine dimension, convex position) is checked eagerly
and any failure is a hard error.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .errors import GenericityViolation, InputError, NotInConvexPosition
from .exactnum import (
    Vector,
    det,
    in_sphere,
    mpq,
    norm_sq,
    orient,
    sub,
)
from .hull import HullComplex, convex_hull


class Kind(enum.Enum):
    DELAUNAY = "delaunay"
    UPPER_DELAUNAY = "upper_delaunay"


@dataclass(frozen=True)
class Triangulation:
    """Simplices partition the convex hull of the points; every simplex of
    the Delaunay kind has an empty circumsphere, of the upper Delaunay kind
    a full one.  Simplices are sorted (d+1)-tuples of point indices."""

    kind: Kind
    dim: int
    points: Tuple[Vector, ...]
    simplices: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GenericityReport:
    is_generic: bool
    violations: Tuple[Tuple[int, ...], ...]
    n: int
    d: int
    is_simplex: bool
    in_convex_position: bool


def lift(p: Vector) -> Vector:
    """Map a d-dimensional point onto the spherical paraboloid in d+1."""
    return tuple(p) + (norm_sq(p),)


def split_facets(h: HullComplex) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Partition facet ids of a lifted hull into (lower, upper) by the sign
    of the last normal coordinate.  A vanishing last coordinate means a
    vertical facet, impossible for generic input."""
    lower, upper = [], []
    for fid, f in enumerate(h.facets):
        last = f.normal[-1]
        if last < 0:
            lower.append(fid)
        elif last > 0:
            upper.append(fid)
        else:
            raise GenericityViolation(
                f"vertical facet {f.vertex_ids} in lifted hull",
                vertex_ids=f.vertex_ids,
            )
    return tuple(lower), tuple(upper)


def _affinely_spanning(points, d) -> bool:
    """True iff some d+1 of the points are affinely independent."""
    if len(points) < d + 1:
        return False
    base = points[0]
    rows = []
    for p in points[1:]:
        cand = rows + [list(sub(p, base))]
        if _rank(cand, d) == len(cand):
            rows = cand
            if len(rows) == d:
                return True
    return False


def _rank(rows, width) -> int:
    m = [list(r) for r in rows]
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / prow[col]
                m[i] = [a - f * b for a, b in zip(m[i], prow)]
        rank += 1
    return rank


def check_generic(
    points: Sequence[Vector], d: int, subset_threshold: int = 25, seed: int = 0
) -> GenericityReport:
    """Genericity report for a candidate polytope vertex set.

    Cospherical (d+2)-tuples are found exhaustively while n stays at or
    below ``subset_threshold``; above it the hull construction's incidence
    errors catch the same degeneracies for supported hyperplanes.
    """
    points = tuple(tuple(p) for p in points)
    n = len(points)
    for p in points:
        if len(p) != d:
            raise InputError(f"point of dimension {len(p)}, expected {d}")

    spanning = _affinely_spanning(points, d)
    is_simplex = n == d + 1 and spanning
    violations = []
    in_convex_position = False
    if spanning and n >= d + 2:
        try:
            convex_hull(points, d, seed=seed)
            in_convex_position = True
        except NotInConvexPosition:
            pass
        except GenericityViolation as exc:
            if exc.vertex_ids is not None:
                violations.append(tuple(sorted(exc.vertex_ids)))
            in_convex_position = True  # degenerate incidences, not interiority
    elif is_simplex:
        in_convex_position = True

    if n >= d + 2 and n <= subset_threshold:
        for subset in combinations(range(n), d + 2):
            v = _cospherical_violation(points, subset)
            if v is not None and v not in violations:
                violations.append(v)
    violations = tuple(sorted(set(violations)))

    is_generic = (
        spanning
        and not is_simplex
        and n >= d + 2
        and in_convex_position
        and not violations
    )
    return GenericityReport(
        is_generic=is_generic,
        violations=violations,
        n=n,
        d=d,
        is_simplex=is_simplex,
        in_convex_position=in_convex_position,
    )


def _cospherical_violation(points, subset) -> Optional[Tuple[int, ...]]:
    """The subset (d+2 ids) if its points are cospherical or all lie on a
    hyperplane, else None."""
    ids = list(subset)
    for query_pos in range(len(ids)):
        simplex_ids = ids[:query_pos] + ids[query_pos + 1 :]
        simplex = [points[i] for i in simplex_ids]
        if orient(simplex) != 0:
            s = in_sphere(simplex, points[ids[query_pos]])
            return tuple(subset) if s == 0 else None
    # every (d+1)-subtuple affinely dependent: all d+2 on one hyperplane
    return tuple(subset)


def lifted_hull(
    points: Sequence[Vector], d: int, seed: int = 0
) -> Tuple[HullComplex, Tuple[int, ...], Tuple[int, ...]]:
    """Hull of the lifted points plus its (lower, upper) facet id groups."""
    lifted = [lift(p) for p in points]
    h = convex_hull(lifted, d + 1, seed=seed)
    lower, upper = split_facets(h)
    return h, lower, upper


def triangulation_from_facets(
    h: HullComplex, facet_ids: Sequence[int], kind: Kind, points, d: int
) -> Triangulation:
    simplices = tuple(sorted(h.facets[fid].vertex_ids for fid in facet_ids))
    return Triangulation(kind=kind, dim=d, points=tuple(points), simplices=simplices)


def delaunay_triangulations(
    points: Sequence[Vector],
    d: int,
    seed: int = 0,
    generic_report: Optional[GenericityReport] = None,
) -> Tuple[Triangulation, Triangulation]:
    """(DT, UDT) of a generic convex simplicial polytope's vertex set."""
    points = tuple(tuple(p) for p in points)
    report = generic_report if generic_report is not None else check_generic(points, d)
    require_generic(report)
    h, lower, upper = lifted_hull(points, d, seed=seed)
    dt = triangulation_from_facets(h, lower, Kind.DELAUNAY, points, d)
    udt = triangulation_from_facets(h, upper, Kind.UPPER_DELAUNAY, points, d)
    return dt, udt


def require_generic(report: GenericityReport) -> None:
    """Raise the appropriate error for a failed genericity report."""
    if report.is_generic:
        return
    if report.violations:
        raise GenericityViolation(
            f"cospherical vertex tuples: {list(report.violations)}",
            vertex_ids=report.violations[0],
        )
    if not report.in_convex_position:
        raise NotInConvexPosition("input is not the vertex set of a convex polytope")
    if report.is_simplex:
        raise InputError("input is a simplex; generic polytopes need n >= d+2")
    raise InputError(f"degenerate input: n={report.n}, d={report.d}")


def triangulation_volume(t: Triangulation) -> "mpq":
    """Exact total volume of the simplices of a triangulation."""
    fact = math.factorial(t.dim)
    total = mpq(0)
    for simplex in t.simplices:
        base = t.points[simplex[0]]
        rows = [sub(t.points[i], base) for i in simplex[1:]]
        total += abs(det(rows))
    return total / fact
