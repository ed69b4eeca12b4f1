"""Seeded random instance generation, batch theorem verification, and the
randomized search for instances with few BM-ears.

Everything here is a pure function of the trial configuration: per-trial
seeds are derived from (seed, trial_index) by a splittable counter scheme,
so re-running, reordering or parallelizing trials cannot change a single
record.  Proved theorems (the 2D census identities, the two-BM-ear and
d+1-BM-ear bounds, the containments and correspondences) are flagged as
defects when violated; the open at-least-d conjecture is recorded but
never asserted.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .delaunay import (
    Kind,
    check_generic,
    lifted_hull,
    require_generic,
    triangulation_from_facets,
)
from .ears import detect_ears
from .errors import GenerationFailure, InputError
from .exactnum import Vector, mpq
from .polygon2d import Census2D, census2d
from .shelling import bm_ear_set
from .spheres import SphereClass, circumsphere, classify_sphere, neighboring_sphere_census

_SPLIT_MIX = 0x9E3779B97F4A7C15


def derive_seed(seed: int, trial_index: int) -> int:
    """Splittable per-trial seed: one multiplicative mix step of a 64-bit
    counter stream, so trials are independent and order-free."""
    x = (seed * _SPLIT_MIX + trial_index + 1) % 2**64
    x ^= x >> 31
    x = (x * 0xBF58476D1CE4E5B9) % 2**64
    x ^= x >> 27
    return x


@dataclass(frozen=True)
class TrialConfig:
    d: int
    n: Tuple[int, int]  # inclusive vertex-count range; (k, k) pins n
    seed: int
    trials: int
    coordinate_denominator_bound: int = 10**6
    max_resamples: int = 1000

    def __post_init__(self):
        lo, hi = self.n
        if self.d < 2 or lo < self.d + 2 or hi < lo or self.trials < 1:
            raise InputError(f"invalid trial config: {self}")


def _sample_polygon(rng, n, bound):
    """Convex-position 2D candidates: stratified angles around the unit
    circle with a radial jitter small enough (O(1/n^2)) that the sagitta of
    adjacent chords dominates it."""
    jitter = min(mpq(1, 16), mpq(1, 8 * n * n))
    angles = sorted(
        2 * math.pi * (i + 0.5 + 0.5 * (rng.random() - 0.5)) / n for i in range(n)
    )
    pts = []
    for theta in angles:
        r = 1 + float(jitter) * rng.random()
        pts.append(
            (
                mpq(round(r * math.cos(theta) * bound), bound),
                mpq(round(r * math.sin(theta) * bound), bound),
            )
        )
    return pts


def _sample_spherical(rng, n, d, bound):
    """Near-unit-sphere candidates in dimension d >= 3."""
    pts = []
    for _ in range(n):
        g = [rng.gauss(0.0, 1.0) for _ in range(d)]
        norm = math.sqrt(sum(x * x for x in g))
        if norm == 0.0:
            g[0], norm = 1.0, 1.0
        r = 1 + rng.random() / 16
        pts.append(tuple(mpq(round(r * x / norm * bound), bound) for x in g))
    return pts


def gen_polytope(cfg: TrialConfig, trial_index: int) -> Tuple[Vector, ...]:
    """Deterministic generic convex simplicial polytope vertices for one
    trial; resamples on any genericity failure up to the configured limit.
    For d = 2 the vertices come out in boundary order."""
    rng = random.Random(derive_seed(cfg.seed, trial_index))
    lo, hi = cfg.n
    n = rng.randint(lo, hi)
    bound = cfg.coordinate_denominator_bound
    for _ in range(cfg.max_resamples):
        if cfg.d == 2:
            pts = _sample_polygon(rng, n, bound)
        else:
            pts = _sample_spherical(rng, n, cfg.d, bound)
        if check_generic(pts, cfg.d).is_generic:
            return tuple(pts)
    raise GenerationFailure(
        f"no generic instance in {cfg.max_resamples} resamples"
        f" (d={cfg.d}, n={n}, seed={cfg.seed}, trial={trial_index})"
    )


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    d: int
    n: int
    is_generic: bool
    dt_simplices: int
    udt_simplices: int
    d_ears: int
    ud_ears: int
    bmd_ears: int
    bmud_ears: int
    empty_spheres: int
    full_spheres: int
    census: Optional[Census2D]  # d = 2 only
    census_identities_pass: Optional[bool]
    thm5_pass: bool
    thm6_pass: bool
    thm2_pass: bool
    thm3_observed: bool
    d_ear_simplices: Tuple[Tuple[int, ...], ...]
    ud_ear_simplices: Tuple[Tuple[int, ...], ...]
    bmd_simplices: Tuple[Tuple[int, ...], ...]
    bmud_simplices: Tuple[Tuple[int, ...], ...]
    defects: Tuple[str, ...]


def _boundary_sorted_polygon(points) -> Tuple[Vector, ...]:
    """Polygon vertices in boundary order around their centroid (counts in
    the census do not depend on the starting vertex or direction)."""
    n = len(points)
    inv = mpq(1, n)
    cx = sum(p[0] for p in points) * inv
    cy = sum(p[1] for p in points) * inv
    return tuple(
        sorted(points, key=lambda p: (math.atan2(float(p[1] - cy), float(p[0] - cx))))
    )


def verify_theorems(points: Sequence[Vector], d: int, seed: int = 0) -> TrialRecord:
    """Run the full pipeline on one instance and check every proved theorem.

    A False in a proved-theorem flag (or any entry in ``defects``) signals
    an implementation bug, unlike thm3_observed = False which is a
    legitimate observation about the open conjecture.
    """
    points = tuple(tuple(p) for p in points)
    report = check_generic(points, d)
    require_generic(report)
    h, lower, upper = lifted_hull(points, d, seed=seed)
    dt = triangulation_from_facets(h, lower, Kind.DELAUNAY, points, d)
    udt = triangulation_from_facets(h, upper, Kind.UPPER_DELAUNAY, points, d)
    ears_d = detect_ears(dt)
    ears_ud = detect_ears(udt)
    bm = bm_ear_set(h, lower, upper, seed=seed)
    census = neighboring_sphere_census(points, d, dt, udt)

    d_ear_simplices = tuple(sorted(dt.simplices[i] for i in ears_d.ear_simplex_ids))
    ud_ear_simplices = tuple(sorted(udt.simplices[i] for i in ears_ud.ear_simplex_ids))
    bmd_simplices = tuple(sorted(h.facets[i].vertex_ids for i in bm.bmd_facet_ids))
    bmud_simplices = tuple(sorted(h.facets[i].vertex_ids for i in bm.bmud_facet_ids))

    defects = []
    if not set(bmd_simplices) <= set(d_ear_simplices):
        defects.append("BMD-ear set not contained in D-ears")
    if not set(bmud_simplices) <= set(ud_ear_simplices):
        defects.append("BMUD-ear set not contained in UD-ears")
    # ear <-> extremal sphere correspondence
    empty_sets = {
        r.vertex_ids for r in census.records if r.sphere_class is SphereClass.EMPTY
    }
    full_sets = {
        r.vertex_ids for r in census.records if r.sphere_class is SphereClass.FULL
    }
    for simplex in d_ear_simplices:
        cls = classify_sphere(
            circumsphere([points[i] for i in simplex]), simplex, points
        )
        if cls is not SphereClass.EMPTY:
            defects.append(f"D-ear {simplex} circumsphere classifies {cls.value}")
    for simplex in ud_ear_simplices:
        cls = classify_sphere(
            circumsphere([points[i] for i in simplex]), simplex, points
        )
        if cls is not SphereClass.FULL:
            defects.append(f"UD-ear {simplex} circumsphere classifies {cls.value}")
    if not empty_sets <= set(d_ear_simplices):
        defects.append("an empty neighboring sphere's simplex is not a D-ear")
    if not full_sets <= set(ud_ear_simplices):
        defects.append("a full neighboring sphere's simplex is not a UD-ear")

    census_2d = None
    census_ok = None
    if d == 2:
        census_2d = census2d(_boundary_sorted_polygon(points), seed=seed)
        census_ok = census_2d.identities_hold()
        if not census_ok:
            defects.append("2D census identities fail")

    thm5 = len(bmd_simplices) >= 2 and len(bmud_simplices) >= 2
    thm6 = len(bmd_simplices) + len(bmud_simplices) >= d + 1
    thm2 = census.empty_count >= 2 and census.full_count >= 2
    if not thm5:
        defects.append("theorem-5 bound violated (|BMD|>=2 and |BMUD|>=2)")
    if not thm6:
        defects.append("theorem-6 bound violated (|BMD|+|BMUD| >= d+1)")
    if not thm2:
        defects.append("extremal sphere count below 2+2")

    return TrialRecord(
        seed=seed,
        d=d,
        n=len(points),
        is_generic=True,
        dt_simplices=len(dt.simplices),
        udt_simplices=len(udt.simplices),
        d_ears=len(d_ear_simplices),
        ud_ears=len(ud_ear_simplices),
        bmd_ears=len(bmd_simplices),
        bmud_ears=len(bmud_simplices),
        empty_spheres=census.empty_count,
        full_spheres=census.full_count,
        census=census_2d,
        census_identities_pass=census_ok,
        thm5_pass=thm5,
        thm6_pass=thm6,
        thm2_pass=thm2,
        thm3_observed=census.empty_count >= d and census.full_count >= d,
        d_ear_simplices=d_ear_simplices,
        ud_ear_simplices=ud_ear_simplices,
        bmd_simplices=bmd_simplices,
        bmud_simplices=bmud_simplices,
        defects=tuple(defects),
    )


@dataclass
class TheoremReport:
    config: TrialConfig
    records: Tuple[TrialRecord, ...]
    thm5_passes: int = 0
    thm6_passes: int = 0
    thm3_observed_count: int = 0
    defect_count: int = 0
    min_bmd: Optional[int] = None
    best_record: Optional[TrialRecord] = None
    best_points: Optional[Tuple[Vector, ...]] = None
    best_trial: Optional[int] = None


def _aggregate(cfg, outcomes) -> TheoremReport:
    records = tuple(rec for _, rec, _ in outcomes)
    rep = TheoremReport(config=cfg, records=records)
    for trial, rec, pts in outcomes:
        rep.thm5_passes += rec.thm5_pass
        rep.thm6_passes += rec.thm6_pass
        rep.thm3_observed_count += rec.thm3_observed
        rep.defect_count += bool(rec.defects)
        key = (rec.bmd_ears, -(rec.d_ears - rec.bmd_ears))
        if rep.min_bmd is None or key < (
            rep.best_record.bmd_ears,
            -(rep.best_record.d_ears - rep.best_record.bmd_ears),
        ):
            rep.min_bmd = rec.bmd_ears
            rep.best_record = rec
            rep.best_points = pts
            rep.best_trial = trial
    return rep


def run_trials(cfg: TrialConfig) -> TheoremReport:
    """Generate and verify cfg.trials instances; deterministic in cfg."""
    outcomes = []
    for trial in range(cfg.trials):
        pts = gen_polytope(cfg, trial)
        rec = verify_theorems(pts, cfg.d, seed=derive_seed(cfg.seed, trial))
        outcomes.append((trial, rec, pts))
    return _aggregate(cfg, outcomes)


def search_min_bm_ears(cfg: TrialConfig) -> TheoremReport:
    """Randomized search for instances with minimal |BMD|, favoring those
    where ears exist that are not BM-ears (ties broken by maximizing
    |D-ears| - |BMD|).  The best instance's coordinates are echoed in the
    report for archival and re-verification."""
    if cfg.d < 3:
        raise InputError("search requires d >= 3; the gap phenomenon is 3D and up")
    return run_trials(cfg)
