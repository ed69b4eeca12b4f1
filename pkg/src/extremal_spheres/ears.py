"""D-ear / UD-ear detection: simplices with at least two (d-1)-faces on
the polytope boundary.  The boundary is read off the triangulation's own
face-incidence counts, so the triangulation stays the single source of
truth; an independent hull run is used only as a test oracle."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from .delaunay import Kind, Triangulation
from .errors import InputError


@dataclass(frozen=True)
class EarSet:
    kind: Kind
    ear_simplex_ids: FrozenSet[int]
    boundary_facet_count: Dict[int, int]


def boundary_facets(t: Triangulation) -> FrozenSet[Tuple[int, ...]]:
    """(d-1)-faces incident to exactly one simplex of the triangulation."""
    counts = Counter()
    for simplex in t.simplices:
        for omit in range(len(simplex)):
            counts[simplex[:omit] + simplex[omit + 1 :]] += 1
    bad = [face for face, c in counts.items() if c > 2]
    if bad:
        raise InputError(f"malformed triangulation: faces {bad} in >2 simplices")
    return frozenset(face for face, c in counts.items() if c == 1)


def detect_ears(t: Triangulation) -> EarSet:
    """Ears of a triangulation: simplices with >= 2 boundary (d-1)-faces."""
    boundary = boundary_facets(t)
    counts = {}
    for sid, simplex in enumerate(t.simplices):
        c = 0
        for omit in range(len(simplex)):
            if simplex[:omit] + simplex[omit + 1 :] in boundary:
                c += 1
        counts[sid] = c
    ears = frozenset(sid for sid, c in counts.items() if c >= 2)
    return EarSet(kind=t.kind, ear_simplex_ids=ears, boundary_facet_count=counts)
