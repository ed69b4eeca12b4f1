"""Incremental exact convex hull in arbitrary dimension.

Randomized incremental beneath-beyond over exact rationals: points are
inserted in a seeded shuffled order, visible facets are found by a full
scan (desk scale: n <= ~60, dim <= 6), the horizon is re-triangulated
with the new point.  Inputs must be in convex position and generic;
anything else raises instead of being silently repaired.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .errors import (
    DegenerateSimplex,
    GenericityViolation,
    InputError,
    NotInConvexPosition,
)
from .exactnum import Scalar, Vector, det, dot, mpq, sign, sub


@dataclass(frozen=True)
class Facet:
    """A simplicial hull facet: hyperplane is normal . x = offset, with the
    outward (not normalized) exact normal; all hull points satisfy
    normal . x <= offset, with equality exactly on the facet vertices."""

    vertex_ids: Tuple[int, ...]
    normal: Vector
    offset: Scalar


@dataclass(frozen=True)
class HullComplex:
    ambient_dim: int
    points: Tuple[Vector, ...]
    facets: Tuple[Facet, ...]
    ridge_adjacency: Dict[Tuple[int, ...], Tuple[int, int]]


def _cross_normal(edges) -> Vector:
    """Generalized cross product: the vector N with det[v; edges] = N . v."""
    dim = len(edges) + 1
    coords = []
    for j in range(dim):
        minor = [[row[i] for i in range(dim) if i != j] for row in edges]
        entry = det(minor)
        coords.append(entry if j % 2 == 0 else -entry)
    return tuple(coords)


def _make_facet(vertex_ids, points, interior) -> Facet:
    verts = [points[i] for i in vertex_ids]
    edges = [sub(v, verts[0]) for v in verts[1:]]
    normal = _cross_normal(edges)
    if all(c == 0 for c in normal):
        raise DegenerateSimplex(f"degenerate facet {vertex_ids}")
    offset = dot(normal, verts[0])
    side = sign(dot(normal, interior) - offset)
    if side == 0:
        raise DegenerateSimplex(f"interior reference on facet hyperplane {vertex_ids}")
    if side > 0:
        normal = tuple(-c for c in normal)
        offset = -offset
    return Facet(tuple(sorted(vertex_ids)), normal, offset)


def _affine_rank(vectors, dim) -> int:
    """Rank of a set of vectors by exact Gaussian elimination."""
    rows = [list(v) for v in vectors]
    rank = 0
    for col in range(dim):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / prow[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _initial_simplex(points, order, dim):
    """First dim+1 affinely independent point ids in shuffled order."""
    chosen = [order[0]]
    for idx in order[1:]:
        edges = [sub(points[i], points[chosen[0]]) for i in chosen[1:]]
        edges.append(sub(points[idx], points[chosen[0]]))
        if _affine_rank(edges, dim) == len(edges):
            chosen.append(idx)
            if len(chosen) == dim + 1:
                return chosen
    raise InputError("points do not affinely span the ambient space")


def convex_hull(points: Sequence[Vector], ambient_dim: int, seed: int = 0) -> HullComplex:
    """Exact convex hull of points in convex position.

    Raises NotInConvexPosition if some point is strictly inside the hull of
    the others, GenericityViolation if a point lies exactly on a facet
    hyperplane, InputError on affine degeneracy or too few points.
    """
    points = tuple(tuple(p) for p in points)
    n = len(points)
    if n < ambient_dim + 1:
        raise InputError(f"need at least {ambient_dim + 1} points, got {n}")
    for p in points:
        if len(p) != ambient_dim:
            raise InputError(f"point of dimension {len(p)}, expected {ambient_dim}")

    order = list(range(n))
    random.Random(seed).shuffle(order)
    init = _initial_simplex(points, order, ambient_dim)
    inv = mpq(1, ambient_dim + 1)
    interior = tuple(
        sum(points[i][c] for i in init) * inv for c in range(ambient_dim)
    )

    facets: Dict[int, Facet] = {}
    next_id = 0
    for omit in range(ambient_dim + 1):
        ids = [v for j, v in enumerate(init) if j != omit]
        facets[next_id] = _make_facet(ids, points, interior)
        next_id += 1

    in_init = set(init)
    for idx in order:
        if idx in in_init:
            continue
        p = points[idx]
        visible = [
            fid for fid, f in facets.items() if dot(f.normal, p) > f.offset
        ]
        if not visible:
            # Inside or on the current hull, hence inside or on the final
            # one; classified precisely by the final checks below.
            continue
        # Horizon: ridges incident to exactly one visible facet (interior
        # ridges of the visible region appear twice, since the facet
        # complex is a closed pseudomanifold at every stage).
        ridge_count: Dict[Tuple[int, ...], int] = {}
        for fid in visible:
            vids = facets[fid].vertex_ids
            for omit in range(len(vids)):
                ridge = vids[:omit] + vids[omit + 1 :]
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        horizon = sorted(r for r, c in ridge_count.items() if c == 1)
        if not horizon:
            raise NotInConvexPosition(
                f"point {idx} sees every facet", point_id=idx
            )
        for fid in visible:
            del facets[fid]
        for ridge in horizon:
            facets[next_id] = _make_facet(list(ridge) + [idx], points, interior)
            next_id += 1

    facet_list = tuple(facets[fid] for fid in sorted(facets))
    _final_checks(points, facet_list)
    return HullComplex(
        ambient_dim=ambient_dim,
        points=points,
        facets=facet_list,
        ridge_adjacency=_ridge_adjacency(facet_list),
    )


def _ridge_adjacency(facets) -> Dict[Tuple[int, ...], Tuple[int, int]]:
    incidence: Dict[Tuple[int, ...], list] = {}
    for fid, f in enumerate(facets):
        vids = f.vertex_ids
        for omit in range(len(vids)):
            ridge = vids[:omit] + vids[omit + 1 :]
            incidence.setdefault(ridge, []).append(fid)
    adjacency = {}
    for ridge, fids in incidence.items():
        if len(fids) != 2:
            raise GenericityViolation(
                f"ridge {ridge} incident to {len(fids)} facets", vertex_ids=ridge
            )
        adjacency[ridge] = (fids[0], fids[1])
    return adjacency


def _final_checks(points, facets):
    """Every point must be a hull vertex, strictly below all non-incident
    facet hyperplanes.  Insertion order can temporarily hide violations
    (a swallowed vertex), so this runs once on the finished complex."""
    used = set()
    for f in facets:
        used.update(f.vertex_ids)
    for idx, p in enumerate(points):
        for f in facets:
            s = sign(dot(f.normal, p) - f.offset)
            if s > 0:
                raise GeometryErrorInternal(f"point {idx} above facet {f.vertex_ids}")
            if s == 0 and idx not in f.vertex_ids:
                raise GenericityViolation(
                    f"point {idx} lies on hyperplane of facet {f.vertex_ids}",
                    vertex_ids=f.vertex_ids + (idx,),
                )
        if idx not in used:
            raise NotInConvexPosition(
                f"point {idx} is not a vertex of the hull", point_id=idx
            )


class GeometryErrorInternal(AssertionError):
    """A postcondition of the hull construction failed (a bug, not input)."""


def complex_diagnostics(h: HullComplex) -> list:
    """All invariant violations of a HullComplex, empty when valid."""
    problems = []
    dim = h.ambient_dim
    used = set()
    for fid, f in enumerate(h.facets):
        used.update(f.vertex_ids)
        if len(f.vertex_ids) != dim:
            problems.append(f"facet {fid} has {len(f.vertex_ids)} vertices")
        if tuple(sorted(f.vertex_ids)) != f.vertex_ids:
            problems.append(f"facet {fid} vertex ids not sorted")
        for idx, p in enumerate(h.points):
            s = sign(dot(f.normal, p) - f.offset)
            if idx in f.vertex_ids:
                if s != 0:
                    problems.append(f"facet {fid} vertex {idx} off its hyperplane")
            elif s > 0:
                problems.append(f"point {idx} strictly above facet {fid}")
            elif s == 0:
                problems.append(f"point {idx} on hyperplane of facet {fid}")
    missing = set(range(len(h.points))) - used
    if missing:
        problems.append(f"points {sorted(missing)} are not hull vertices")
    incidence: Dict[Tuple[int, ...], list] = {}
    for fid, f in enumerate(h.facets):
        vids = f.vertex_ids
        for omit in range(len(vids)):
            ridge = vids[:omit] + vids[omit + 1 :]
            incidence.setdefault(ridge, []).append(fid)
    for ridge, fids in incidence.items():
        if len(fids) != 2:
            problems.append(f"ridge {ridge} in {len(fids)} facets")
        elif h.ridge_adjacency.get(ridge) is None:
            problems.append(f"ridge {ridge} missing from adjacency")
        elif set(h.ridge_adjacency[ridge]) != set(fids):
            problems.append(f"ridge {ridge} adjacency mismatch")
    for ridge in h.ridge_adjacency:
        if ridge not in incidence:
            problems.append(f"adjacency lists unknown ridge {ridge}")
    return problems


def validate_complex(h: HullComplex) -> bool:
    """True iff all HullComplex invariants hold (see complex_diagnostics)."""
    return not complex_diagnostics(h)


def hull_volume(h: HullComplex) -> Scalar:
    """Exact volume: fan of simplices from the vertex centroid."""
    dim = h.ambient_dim
    inv = mpq(1, len(h.points))
    c = tuple(sum(p[j] for p in h.points) * inv for j in range(dim))
    fact = math.factorial(dim)
    total = mpq(0)
    for f in h.facets:
        rows = [sub(h.points[i], c) for i in f.vertex_ids]
        total += abs(det(rows))
    return total / fact
