"""Exact-arithmetic analysis of convex point sets: Delaunay and upper
Delaunay triangulations via paraboloid lifting, neighboring-sphere
classification, ear detection, line shellings, and a randomized search
harness, all over exact rational coordinates."""

from .delaunay import (
    GenericityReport,
    Kind,
    Triangulation,
    check_generic,
    delaunay_triangulations,
    lift,
    lifted_hull,
    triangulation_volume,
)
from .ears import EarSet, boundary_facets, detect_ears
from .errors import (
    DegenerateSimplex,
    GenerationFailure,
    GenericityViolation,
    GeometryError,
    InputError,
    NotABMEar,
    NotInConvexPosition,
    PointFileError,
)
from .exactnum import Scalar, Vector, det, in_sphere, orient, to_scalar
from .harness import (
    TheoremReport,
    TrialConfig,
    TrialRecord,
    derive_seed,
    gen_polytope,
    run_trials,
    search_min_bm_ears,
    verify_theorems,
)
from .hull import Facet, HullComplex, convex_hull, hull_volume, validate_complex
from .polygon2d import Census2D, RadiiReport, census2d, curvature_radii
from .shelling import (
    BMEarReport,
    ShellingOrder,
    bm_ear_set,
    envelope_witness,
    line_shelling,
    validate_shelling,
)
from .spheres import (
    RidgeSphereCensus,
    Sphere,
    SphereClass,
    circumsphere,
    classify_sphere,
    neighboring_sphere_census,
)

__version__ = "0.1.0"

__all__ = [
    "BMEarReport",
    "Census2D",
    "DegenerateSimplex",
    "EarSet",
    "Facet",
    "GenerationFailure",
    "GenericityReport",
    "GenericityViolation",
    "GeometryError",
    "HullComplex",
    "InputError",
    "Kind",
    "NotABMEar",
    "NotInConvexPosition",
    "PointFileError",
    "RadiiReport",
    "RidgeSphereCensus",
    "Scalar",
    "ShellingOrder",
    "Sphere",
    "SphereClass",
    "TheoremReport",
    "TrialConfig",
    "TrialRecord",
    "Triangulation",
    "Vector",
    "bm_ear_set",
    "boundary_facets",
    "census2d",
    "check_generic",
    "circumsphere",
    "classify_sphere",
    "convex_hull",
    "curvature_radii",
    "delaunay_triangulations",
    "derive_seed",
    "det",
    "detect_ears",
    "envelope_witness",
    "gen_polytope",
    "hull_volume",
    "in_sphere",
    "lift",
    "lifted_hull",
    "line_shelling",
    "neighboring_sphere_census",
    "orient",
    "run_trials",
    "search_min_bm_ears",
    "to_scalar",
    "triangulation_volume",
    "validate_complex",
    "validate_shelling",
    "verify_theorems",
]
