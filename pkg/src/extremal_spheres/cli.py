"""Command-line front end: point-file ingestion, JSON reports, SVG figures
for d = 2, and subcommands wiring all library modules.

Exit codes: 0 success, 2 input not generic or not in convex position,
3 parse error, 4 proved-theorem violation (an implementation defect
signal, never expected), 5 shelling target is not a BM-ear.

Point files: a header line "d n", then n lines of d whitespace-separated
coordinates, each a decimal literal or a rational "p/q"; lines starting
with "#" are comments.  Reports are JSON with a fixed key order so equal
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence, Tuple

from .delaunay import Kind, check_generic, lifted_hull, triangulation_from_facets
from .ears import detect_ears
from .errors import (
    GenericityViolation,
    GeometryError,
    InputError,
    NotABMEar,
    NotInConvexPosition,
    PointFileError,
)
from .exactnum import Vector, to_scalar
from .harness import (
    TrialConfig,
    TrialRecord,
    _boundary_sorted_polygon,
    gen_polytope,
    search_min_bm_ears,
    verify_theorems,
)
from .polygon2d import census2d
from .shelling import line_shelling, validate_shelling
from .spheres import neighboring_sphere_census
from .svg import render_svg

EXIT_OK = 0
EXIT_NOT_GENERIC = 2
EXIT_PARSE = 3
EXIT_THEOREM_VIOLATION = 4
EXIT_NOT_BM_EAR = 5


def parse_points(path: str) -> Tuple[Tuple[Vector, ...], int]:
    """Read a point file; every coordinate parses exactly or the error
    carries the offending 1-based line number."""
    points: List[Vector] = []
    d = n = None
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if d is None:
                if len(fields) != 2:
                    raise PointFileError(line_no, "header must be 'd n'")
                try:
                    d, n = int(fields[0]), int(fields[1])
                except ValueError:
                    raise PointFileError(line_no, "header must be 'd n'")
                if d < 1 or n < 1:
                    raise PointFileError(line_no, "header needs d >= 1, n >= 1")
                continue
            if len(points) == n:
                raise PointFileError(line_no, f"more than {n} coordinate lines")
            if len(fields) != d:
                raise PointFileError(
                    line_no, f"expected {d} coordinates, got {len(fields)}"
                )
            try:
                points.append(tuple(to_scalar(f) for f in fields))
            except (InputError, ValueError, ZeroDivisionError) as exc:
                raise PointFileError(line_no, str(exc))
    if d is None:
        raise PointFileError(1, "empty file")
    if len(points) != n:
        raise PointFileError(
            line_no, f"header declares {n} points, file has {len(points)}"
        )
    return tuple(points), d


def format_points(points: Sequence[Vector], d: int, comment: str = "") -> str:
    """Point-file text with coordinates as exact 'p/q' strings; re-reading
    it reproduces the input bit for bit."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{d} {len(points)}")
    for p in points:
        lines.append(" ".join(str(x) for x in p))
    return "\n".join(lines) + "\n"


def _dumps(obj) -> str:
    # key order is insertion order; fixed here for byte-stable reports
    return json.dumps(obj, indent=2) + "\n"


def report_json(rec: TrialRecord) -> str:
    report = {
        "dim": rec.d,
        "n": rec.n,
        "generic": rec.is_generic,
        "counts": {
            "dt_simplices": rec.dt_simplices,
            "udt_simplices": rec.udt_simplices,
            "d_ears": rec.d_ears,
            "ud_ears": rec.ud_ears,
            "bmd_ears": rec.bmd_ears,
            "bmud_ears": rec.bmud_ears,
            "empty_neighboring_spheres": rec.empty_spheres,
            "full_neighboring_spheres": rec.full_spheres,
        },
    }
    if rec.d == 2:
        c = rec.census
        report["census2d"] = {
            "s_minus": c.s_minus,
            "t_minus": c.t_minus,
            "u_minus": c.u_minus,
            "s_plus": c.s_plus,
            "t_plus": c.t_plus,
            "u_plus": c.u_plus,
        }
    report["theorems"] = {
        "thm5_pass": rec.thm5_pass,
        "thm6_pass": rec.thm6_pass,
        "thm2_pass": rec.thm2_pass,
        "census_identities_pass": rec.census_identities_pass,
        "thm3_observed": rec.thm3_observed,
    }
    report["ears"] = {
        "d": [list(s) for s in rec.d_ear_simplices],
        "ud": [list(s) for s in rec.ud_ear_simplices],
    }
    report["bm_ears"] = {
        "bmd": [list(s) for s in rec.bmd_simplices],
        "bmud": [list(s) for s in rec.bmud_simplices],
    }
    return _dumps(report)


def _default_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("ESPH_SEED")
    return int(env) if env else 0


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    points, d = parse_points(args.file)
    rep = check_generic(points, d)
    report = {
        "dim": d,
        "n": len(points),
        "generic": rep.is_generic,
        "is_simplex": rep.is_simplex,
        "in_convex_position": rep.in_convex_position,
        "violations": [list(v) for v in rep.violations],
    }
    _write(_dumps(report), args.out)
    return EXIT_OK if rep.is_generic else EXIT_NOT_GENERIC


def cmd_analyze(args) -> int:
    points, d = parse_points(args.file)
    rec = verify_theorems(points, d, seed=_default_seed(args))
    _write(report_json(rec), args.out)
    if rec.defects:
        for defect in rec.defects:
            print(f"theorem violation: {defect}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION
    return EXIT_OK


def cmd_census2d(args) -> int:
    points, d = parse_points(args.file)
    if d != 2:
        raise InputError("census2d needs a 2D point file")
    polygon = _boundary_sorted_polygon(points)
    census = census2d(polygon, seed=_default_seed(args))
    report = {
        "n": census.n,
        "s_minus": census.s_minus,
        "t_minus": census.t_minus,
        "u_minus": census.u_minus,
        "s_plus": census.s_plus,
        "t_plus": census.t_plus,
        "u_plus": census.u_plus,
        "identities_pass": census.identities_hold(),
    }
    _write(_dumps(report), args.out)
    return EXIT_OK if census.identities_hold() else EXIT_THEOREM_VIOLATION


def cmd_shelling(args) -> int:
    points, d = parse_points(args.file)
    seed = _default_seed(args)
    target = tuple(sorted(int(x) for x in args.target.split(",")))
    if len(target) != d + 1:
        raise InputError(f"target must list {d + 1} vertex ids")
    rep = check_generic(points, d)
    if not rep.is_generic or not rep.in_convex_position:
        raise GenericityViolation("input is not a generic convex instance")
    h, lower, upper = lifted_hull(points, d, seed=seed)
    group = lower if args.group == "lower" else upper
    by_vertices = {h.facets[i].vertex_ids: i for i in group}
    if target not in by_vertices:
        raise InputError(f"no {args.group} facet with vertices {list(target)}")
    order = line_shelling(h, group, by_vertices[target], seed=seed)
    kind = Kind.DELAUNAY if args.group == "lower" else Kind.UPPER_DELAUNAY
    t = triangulation_from_facets(h, group, kind, points, d)
    validate_shelling(order, t)
    report = {
        "group": args.group,
        "target": list(target),
        "order": [list(s) for s in order.simplices],
    }
    _write(_dumps(report), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = _default_seed(args)
    cfg = TrialConfig(d=args.dim, n=(args.verts, args.verts), seed=seed, trials=1)
    points = gen_polytope(cfg, 0)
    text = format_points(points, args.dim, comment=f"dim={args.dim} seed={seed}")
    _write(text, args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    seed = _default_seed(args)
    lo, hi = (int(x) for x in args.verts.split(","))
    cfg = TrialConfig(d=args.dim, n=(lo, hi), seed=seed, trials=args.trials)
    rep = search_min_bm_ears(cfg)
    best = rep.best_record
    report = {
        "dim": args.dim,
        "trials": args.trials,
        "seed": seed,
        "defect_count": rep.defect_count,
        "min_bmd": rep.min_bmd,
        "best_trial": rep.best_trial,
        "best": {
            "n": best.n,
            "d_ears": best.d_ears,
            "ud_ears": best.ud_ears,
            "bmd_ears": best.bmd_ears,
            "bmud_ears": best.bmud_ears,
            "bmd_simplices": [list(s) for s in best.bmd_simplices],
            "points": [[str(x) for x in p] for p in rep.best_points],
        },
    }
    _write(_dumps(report), args.out)
    if args.dump:
        comment = f"search best: dim={args.dim} seed={seed} trial={rep.best_trial}"
        with open(args.dump, "w") as fh:
            fh.write(format_points(rep.best_points, args.dim, comment=comment))
    if rep.defect_count:
        # implementation defect: archive every offending instance
        for trial, rec in enumerate(rep.records):
            if rec.defects:
                print(f"trial {trial}: {'; '.join(rec.defects)}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION
    return EXIT_OK


def cmd_svg(args) -> int:
    points, d = parse_points(args.file)
    if d != 2:
        raise InputError("svg output needs a 2D point file")
    seed = _default_seed(args)
    polygon = _boundary_sorted_polygon(points)
    h, lower, upper = lifted_hull(polygon, 2, seed=seed)
    dt = triangulation_from_facets(h, lower, Kind.DELAUNAY, polygon, 2)
    udt = triangulation_from_facets(h, upper, Kind.UPPER_DELAUNAY, polygon, 2)
    census = neighboring_sphere_census(polygon, 2, dt, udt)
    ears = detect_ears(dt)
    ear_simplices = [dt.simplices[i] for i in ears.ear_simplex_ids]
    _write(render_svg(polygon, dt, census, ear_simplices), args.out)
    return EXIT_OK


def _add_common(sub, with_file=True):
    if with_file:
        sub.add_argument("file", help="point file")
    sub.add_argument("--seed", type=int, default=None, help="RNG seed (default: ESPH_SEED or 0)")
    sub.add_argument("--out", default=None, help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esph",
        description="Exact Delaunay, ear, and shelling analysis of convex point sets",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="genericity and convex-position report")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("analyze", help="full pipeline report for a point file")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("census2d", help="empty/full circle census of a convex polygon")
    _add_common(p)
    p.set_defaults(func=cmd_census2d)

    p = subs.add_parser("shelling", help="line shelling ending at a BM-ear facet")
    _add_common(p)
    p.add_argument("--target", required=True, help="comma-separated vertex ids of the target facet")
    p.add_argument("--group", choices=("lower", "upper"), required=True)
    p.set_defaults(func=cmd_shelling)

    p = subs.add_parser("gen", help="generate a generic convex instance")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--verts", type=int, required=True)
    _add_common(p, with_file=False)
    p.set_defaults(func=cmd_gen)

    p = subs.add_parser("search", help="randomized search for instances with few BM-ears")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--verts", default=None, help="vertex-count range 'lo,hi'")
    p.add_argument("--dump", default=None, help="write the best instance as a point file")
    _add_common(p, with_file=False)
    p.set_defaults(func=cmd_search)

    p = subs.add_parser("svg", help="SVG figure of a 2D instance")
    _add_common(p)
    p.set_defaults(func=cmd_svg)

    return parser


def run_subcommand(argv: Sequence[str]) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "search" and args.verts is None:
        args.verts = f"{args.dim + 2},{args.dim + 6}"
    try:
        return args.func(args)
    except PointFileError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except NotABMEar as exc:
        print(f"not a BM-ear: {exc}", file=sys.stderr)
        return EXIT_NOT_BM_EAR
    except (GenericityViolation, NotInConvexPosition) as exc:
        print(f"input rejected: {exc}", file=sys.stderr)
        return EXIT_NOT_GENERIC
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOT_GENERIC


def main() -> None:
    sys.exit(run_subcommand(sys.argv[1:]))


if __name__ == "__main__":
    main()
