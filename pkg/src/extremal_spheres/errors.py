"""Exception hierarchy shared by all geometry modules."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class InputError(GeometryError):
    """Malformed input: dimension mismatch, too few points, bad arguments."""


class DegenerateSimplex(GeometryError):
    """A simplex whose vertices are affinely dependent."""


class NotInConvexPosition(GeometryError):
    """An input point lies strictly inside the convex hull of the others."""

    def __init__(self, message, point_id=None):
        super().__init__(message)
        self.point_id = point_id


class GenericityViolation(GeometryError):
    """A degeneracy forbidden for generic inputs: cospherical or coplanar
    point tuples, a point exactly on a hyperplane, a tied comparison."""

    def __init__(self, message, vertex_ids=None):
        super().__init__(message)
        self.vertex_ids = tuple(vertex_ids) if vertex_ids is not None else None


class NotABMEar(GeometryError):
    """The requested facet does not support the lower/upper envelope, so no
    line shelling can end at it."""


class GenerationFailure(GeometryError):
    """Random instance generation exhausted its resample budget."""


class PointFileError(GeometryError):
    """A point file failed to parse; carries the 1-based offending line."""

    def __init__(self, line_no, message):
        super().__init__(f"parse error: line {line_no}: {message}")
        self.line_no = line_no
