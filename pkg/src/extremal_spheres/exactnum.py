"""Exact rational arithmetic, vectors, determinants and sign predicates.

Every coordinate in this package is a ``gmpy2.mpq`` (arbitrary-precision
rational, always kept in canonical form: positive denominator, reduced).
Vectors are plain tuples of scalars.  Signs are the ints -1, 0, +1 with
their natural order.

Orientation convention: ``orient`` is Positive (+1) for a right-handed
simplex, i.e. when the determinant of the edge vectors (p_i - p_0) is
positive.  This convention is fixed globally.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq, mpz

from .errors import DegenerateSimplex, InputError

Scalar = mpq
Vector = tuple  # tuple of Scalar

ZERO = mpq(0)
ONE = mpq(1)

NEGATIVE, SIGN_ZERO, POSITIVE = -1, 0, 1


def to_scalar(value) -> Scalar:
    """Convert ints, rational strings ("p/q"), decimal strings ("0.25"),
    Fractions and mpq to an exact Scalar.  Floats are rejected: decimal
    literals must arrive as strings so the conversion stays exact."""
    if isinstance(value, mpq):
        return value
    if isinstance(value, (int, mpz)):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse scalar {value!r}") from exc
        return mpq(frac.numerator, frac.denominator)
    raise InputError(f"cannot convert {type(value).__name__} to Scalar exactly")


def vec(*coords) -> Vector:
    return tuple(to_scalar(c) for c in coords)


def as_vector(coords: Sequence) -> Vector:
    return tuple(to_scalar(c) for c in coords)


def sign(x) -> int:
    """Sign of a scalar as -1, 0 or +1."""
    if x > 0:
        return POSITIVE
    if x < 0:
        return NEGATIVE
    return SIGN_ZERO


def dot(u: Vector, v: Vector) -> Scalar:
    return sum(a * b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(u: Vector, c) -> Vector:
    return tuple(a * c for a in u)


def norm_sq(v: Vector) -> Scalar:
    return sum(a * a for a in v)


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _bareiss(m) -> int:
    """Exact determinant of a square integer matrix by fraction-free
    Bareiss elimination.  Mutates its argument."""
    n = len(m)
    det_sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    det_sign = -det_sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return det_sign * m[-1][-1]


def det(rows) -> Scalar:
    """Exact determinant of a square matrix of Scalars.

    Small orders are expanded directly; larger ones clear denominators
    row by row and run integer Bareiss elimination, which avoids rational
    gcd churn in the inner loop.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    if n == 1:
        return mpq(rows[0][0])
    if n == 2:
        return _det2(rows)
    if n == 3:
        return _det3(rows)
    denom = 1
    int_rows = []
    for row in rows:
        lcm = 1
        for x in row:
            lcm = math.lcm(lcm, int(x.denominator))
        int_rows.append([int(x.numerator) * (lcm // int(x.denominator)) for x in row])
        denom *= lcm
    return mpq(_bareiss(int_rows), denom)


def _check_dims(points, dim, expected_len, what):
    if len(points) != expected_len:
        raise InputError(f"{what}: expected {expected_len} points, got {len(points)}")
    for p in points:
        if len(p) != dim:
            raise InputError(f"{what}: point of dimension {len(p)}, expected {dim}")


def orient(simplex: Sequence[Vector]) -> int:
    """Orientation sign of k+1 points in dimension k.

    Returns the sign of det[(p_i - p_0)], i = 1..k: +1 for a right-handed
    simplex, 0 iff the points are affinely dependent.
    """
    k = len(simplex) - 1
    _check_dims(simplex, k, k + 1, "orient")
    if k == 0:
        return POSITIVE
    p0 = simplex[0]
    rows = [sub(p, p0) for p in simplex[1:]]
    return sign(det(rows))


def in_sphere(simplex: Sequence[Vector], query: Vector) -> int:
    """Sign of the circumsphere test for k+1 simplex points in dimension k.

    +1 if ``query`` is strictly inside the circumsphere of ``simplex``,
    -1 if strictly outside, 0 if cospherical.  The raw lifted determinant
    (rows (p_i - q, |p_i|^2 - |q|^2)) is multiplied by the simplex
    orientation, so the result does not depend on the vertex order.
    """
    k = len(simplex) - 1
    _check_dims(simplex, k, k + 1, "in_sphere")
    if len(query) != k:
        raise InputError(f"in_sphere: query of dimension {len(query)}, expected {k}")
    o = orient(simplex)
    if o == 0:
        raise DegenerateSimplex("in_sphere: affinely dependent simplex")
    nq = norm_sq(query)
    rows = [sub(p, query) + (norm_sq(p) - nq,) for p in simplex]
    # The raw determinant equals (-1)^k times the height of lift(query)
    # below the lifted simplex hyperplane, normalized by the orientation;
    # the parity factor makes "inside" positive in every dimension.
    parity = 1 if k % 2 == 0 else -1
    return sign(det(rows)) * o * parity
