"""Bruggesser-Mani line shellings and BM-ear certification.

A facet hyperplane of the lifted hull is written as the graph of an affine
function h_j over the first d coordinates.  A lower facet F is a BM-ear
iff some x satisfies h_F(x) < h_j(x) for every other facet j, i.e. F
carries a facet of the lower half-space intersection P-; dually for upper
facets and P+.  Strict feasibility is decided by a seeded randomized
incremental (Seidel) linear program over exact rationals, maximizing the
common slack.  The variable box needed by Seidel's recursion is kept
symbolic: values are pairs alpha + beta*M with M an infinitely large
formal bound, so no concrete "big enough" constant ever has to be guessed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from .delaunay import Kind, Triangulation
from .errors import GenericityViolation, InputError, NotABMEar
from .exactnum import Scalar, Vector, dot, mpq, sub
from .hull import HullComplex


# Values in the LP are pairs (alpha, beta) meaning alpha + beta*M for a
# formal infinitely large box bound M; their order is lexicographic on
# (beta, alpha), the order of the real values for all large enough M.
_Q0 = mpq(0)
_Q1 = mpq(1)


def _seidel(constraints, objective, rng, shuffle=True) -> Optional[list]:
    """Maximize objective . y subject to a . y <= b and |y_i| <= M.

    ``constraints`` is a list of (coeffs: tuple of Scalar, rhs_alpha,
    rhs_beta).  Returns the optimal y as a list of (alpha, beta) pairs, or
    None when infeasible.  Classic Seidel recursion: process constraints in
    random order; when the incumbent violates one, the new optimum lies on
    its hyperplane, so one variable is eliminated and the prefix is solved
    in dimension k-1 (in its already-random order).
    """
    k = len(objective)
    if k == 0:
        for _, ra, rm in constraints:
            if (rm, ra) < (_Q0, _Q0):
                return None
        return []
    order = list(constraints)
    if shuffle:
        rng.shuffle(order)
    y = [
        (_Q0, _Q1) if ci > 0 else ((_Q0, -_Q1) if ci < 0 else (_Q0, _Q0))
        for ci in objective
    ]
    for t in range(len(order)):
        a, ra, rm = order[t]
        lhs_a = lhs_m = _Q0
        for aj, (ya, ym) in zip(a, y):
            if aj:
                lhs_a += aj * ya
                lhs_m += aj * ym
        if (lhs_m, lhs_a) <= (rm, ra):
            continue
        pivot = max(range(k), key=lambda j: abs(a[j]))
        pa = a[pivot]
        if not pa:
            return None
        inv = 1 / pa
        idxs = [j for j in range(k) if j != pivot]
        sub_cons = []
        for ca, cra, crm in order[:t]:
            f = ca[pivot]
            if f:
                f *= inv
                sub_cons.append(
                    (
                        tuple(ca[j] - f * a[j] for j in idxs),
                        cra - f * ra,
                        crm - f * rm,
                    )
                )
            else:
                sub_cons.append((tuple(ca[j] for j in idxs), cra, crm))
        # box faces of the eliminated variable become ordinary constraints
        sub_cons.append(
            (tuple(-inv * a[j] for j in idxs), -inv * ra, _Q1 - inv * rm)
        )
        sub_cons.append(
            (tuple(inv * a[j] for j in idxs), inv * ra, _Q1 + inv * rm)
        )
        fo = objective[pivot] * inv
        sub_obj = tuple(objective[j] - fo * a[j] for j in idxs)
        sol = _seidel(sub_cons, sub_obj, rng, shuffle=False)
        if sol is None:
            return None
        acc_a, acc_m = ra, rm
        for j, (ya, ym) in zip(idxs, sol):
            if a[j]:
                acc_a -= a[j] * ya
                acc_m -= a[j] * ym
        y = list(sol)
        y.insert(pivot, (inv * acc_a, inv * acc_m))
    return y


@dataclass(frozen=True)
class AffineForm:
    """Facet hyperplane as the graph x_{d+1} = a . x + b."""

    a: Vector
    b: Scalar


def affine_forms(h: HullComplex) -> Tuple[AffineForm, ...]:
    forms = []
    for f in h.facets:
        last = f.normal[-1]
        if last == 0:
            raise GenericityViolation(
                f"vertical facet hyperplane {f.vertex_ids}", vertex_ids=f.vertex_ids
            )
        inv = 1 / last
        forms.append(
            AffineForm(
                a=tuple(-c * inv for c in f.normal[:-1]),
                b=f.offset * inv,
            )
        )
    return tuple(forms)


def _support_constraints(forms, fid, side):
    """Seidel constraints for 'facet fid strictly attains the lower (side
    -1) or upper (side +1) envelope', in variables (x_1..x_d, t)."""
    d = len(forms[fid].a)
    a_f, b_f = forms[fid].a, forms[fid].b
    constraints = []
    for j, form in enumerate(forms):
        if j == fid:
            continue
        if side < 0:
            coeffs = tuple(af - aj for af, aj in zip(a_f, form.a)) + (_Q1,)
            rhs = form.b - b_f
        else:
            coeffs = tuple(aj - af for af, aj in zip(a_f, form.a)) + (_Q1,)
            rhs = b_f - form.b
        constraints.append((coeffs, rhs, _Q0))
    constraints.append((tuple([_Q0] * d + [_Q1]), _Q1, _Q0))
    return constraints


def _materialize(x_sym, check) -> Tuple[Scalar, ...]:
    """Instantiate the formal M in a symbolic LP solution with a concrete
    value large enough that ``check`` accepts the resulting point."""
    big = mpq(2) ** 16
    for _ in range(256):
        candidate = tuple(alpha + beta * big for alpha, beta in x_sym)
        if check(candidate):
            return candidate
        big *= big
    raise AssertionError("could not materialize LP witness (bug)")


def _strictly_supports(forms, fid, side, x0) -> bool:
    a_f, b_f = forms[fid].a, forms[fid].b
    h_f = dot(a_f, x0) + b_f
    for j, form in enumerate(forms):
        if j == fid:
            continue
        h_j = dot(form.a, x0) + form.b
        if side < 0:
            if not h_f < h_j:
                return False
        elif not h_f > h_j:
            return False
    return True


def envelope_witness(
    forms: Sequence[AffineForm],
    fid: int,
    side: int,
    seed: int = 0,
    hint: Optional[Tuple[Scalar, ...]] = None,
) -> Optional[Tuple[Scalar, ...]]:
    """A rational point x where facet ``fid`` strictly attains the lower
    (side=-1) or upper (side=+1) envelope, or None if there is none.

    Any strictly supporting point certifies, so a cheap ``hint`` (the
    projected facet centroid usually works) is tried before the LP."""
    if hint is not None and _strictly_supports(forms, fid, side, hint):
        return hint
    rng = random.Random(f"{seed}:{fid}:{side}")
    d = len(forms[fid].a)
    objective = tuple([_Q0] * d + [_Q1])
    sol = _seidel(_support_constraints(forms, fid, side), objective, rng)
    if sol is None:
        raise AssertionError("slack LP reported infeasible (bug)")
    t_alpha, t_beta = sol[d]
    if (t_beta, t_alpha) <= (_Q0, _Q0):
        return None
    return _materialize(sol[:d], lambda x: _strictly_supports(forms, fid, side, x))


def _facet_centroid(h: HullComplex, fid: int, d: int, inv) -> Tuple[Scalar, ...]:
    verts = [h.points[i] for i in h.facets[fid].vertex_ids]
    return tuple(sum(v[j] for v in verts) * inv for j in range(d))


@dataclass(frozen=True)
class BMEarReport:
    bmd_facet_ids: FrozenSet[int]
    bmud_facet_ids: FrozenSet[int]
    witnesses: Dict[int, Vector]  # facet id -> point on its hyperplane in R^{d+1}


def bm_ear_set(
    h: HullComplex,
    lower_ids: Sequence[int],
    upper_ids: Sequence[int],
    seed: int = 0,
) -> BMEarReport:
    """BM-ears of both groups via the envelope support test.

    A lower facet is certified iff its hyperplane carries a facet of P-
    (the intersection of all lower half-spaces); dually for upper facets
    and P+.  Witnesses are strict-feasibility points of the exact LPs,
    lifted back onto the certified hyperplane.
    """
    forms = affine_forms(h)
    d = h.ambient_dim - 1
    inv = mpq(1, h.ambient_dim)  # a lifted-hull facet has d+1 vertices
    bmd, bmud, witnesses = [], [], {}
    for side, group, out in ((-1, lower_ids, bmd), (1, upper_ids, bmud)):
        for fid in group:
            x0 = envelope_witness(
                forms, fid, side, seed=seed, hint=_facet_centroid(h, fid, d, inv)
            )
            if x0 is None:
                continue
            out.append(fid)
            witnesses[fid] = x0 + (dot(forms[fid].a, x0) + forms[fid].b,)
    return BMEarReport(
        bmd_facet_ids=frozenset(bmd),
        bmud_facet_ids=frozenset(bmud),
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class ShellingOrder:
    kind: Kind
    facet_order: Tuple[int, ...]
    simplices: Tuple[Tuple[int, ...], ...]  # projected, parallel to facet_order
    line: Tuple[Vector, Vector]  # (base point, direction) in R^{d+1}


def _hull_centroid(h: HullComplex) -> Vector:
    inv = mpq(1, len(h.points))
    return tuple(
        sum(p[j] for p in h.points) * inv for j in range(h.ambient_dim)
    )


def line_shelling(
    h: HullComplex,
    group_ids: Sequence[int],
    target_facet: int,
    seed: int = 0,
) -> ShellingOrder:
    """Bruggesser-Mani shelling of one facet group ending at target_facet.

    The ray runs from an interior point of the hull through the target's
    envelope witness; group facets are ordered by the exact crossing
    parameter of the ray with their hyperplanes.  The witness lies on the
    target's hyperplane and strictly beyond every other group hyperplane,
    so the target is crossed last (at parameter 1).
    """
    if target_facet not in group_ids:
        raise InputError(f"target facet {target_facet} not in the group")
    forms = affine_forms(h)
    side = -1 if h.facets[target_facet].normal[-1] < 0 else 1
    for fid in group_ids:
        fside = -1 if h.facets[fid].normal[-1] < 0 else 1
        if fside != side:
            raise InputError("group mixes lower and upper facets")
    d = h.ambient_dim - 1
    x0 = envelope_witness(
        forms,
        target_facet,
        side,
        seed=seed,
        hint=_facet_centroid(h, target_facet, d, mpq(1, h.ambient_dim)),
    )
    if x0 is None:
        raise NotABMEar(
            f"facet {h.facets[target_facet].vertex_ids} does not support the envelope"
        )
    c = _hull_centroid(h)
    x_c = c[:d]
    rng = random.Random(f"{seed}:{target_facet}:tiebreak")
    eps = mpq(1, 2**48)
    for _ in range(16):
        w = x0 + (dot(forms[target_facet].a, x0) + forms[target_facet].b,)
        params = []
        for fid in group_ids:
            f = h.facets[fid]
            denom = dot(f.normal, w) - dot(f.normal, c)
            if not denom > 0:
                raise AssertionError(
                    "witness ray fails to cross a group hyperplane forward (bug)"
                )
            params.append((f.offset - dot(f.normal, c)) / denom)
        if len(set(params)) == len(params):
            order = tuple(fid for _, fid in sorted(zip(params, group_ids)))
            assert order[-1] == target_facet
            return ShellingOrder(
                kind=Kind.DELAUNAY if side < 0 else Kind.UPPER_DELAUNAY,
                facet_order=order,
                simplices=tuple(h.facets[fid].vertex_ids for fid in order),
                line=(c, sub(w, c)),
            )
        # Tie: slide the witness along the target hyperplane toward the
        # interior point's projection, with a retry-doubling step and a
        # seeded jitter; strictness is re-verified before reuse.
        drift = sub(x_c, x0)
        if all(coord == 0 for coord in drift):
            drift = tuple([mpq(1)] + [mpq(0)] * (d - 1))
        jitter = tuple(mpq(rng.randrange(-999, 1000), 10**9) for _ in range(d))
        cand = tuple(
            x + eps * (dx + jx) for x, dx, jx in zip(x0, drift, jitter)
        )
        if _strictly_supports(forms, target_facet, side, cand):
            x0 = cand
        eps *= 2
    raise GenericityViolation("could not break crossing-parameter ties")


def validate_shelling(order: ShellingOrder, t: Triangulation) -> bool:
    """True iff the order is a shelling of the triangulation's simplices.

    For each position s >= 2 the intersection of simplex F_s with the union
    of its predecessors must be a nonempty union of its (d-1)-faces, proper
    except possibly at the last position.  For a simplex boundary any
    nonempty proper family of facets begins a shelling, so this check is
    exact on simplicial complexes.
    """
    if sorted(order.simplices) != sorted(t.simplices):
        return False
    return _is_shelling(order.simplices)


def _is_shelling(simplices: Sequence[Tuple[int, ...]]) -> bool:
    m = len(simplices)
    for s in range(1, m):
        cur = simplices[s]
        cur_set = set(cur)
        faces = [frozenset(cur) - {v} for v in cur]
        earlier = simplices[:s]
        shared_faces = set()
        for prev in earlier:
            prev_set = set(prev)
            for face in faces:
                if face <= prev_set:
                    shared_faces.add(face)
        if not shared_faces:
            return False
        for prev in earlier:
            common = cur_set & set(prev)
            if common and not any(common <= face for face in shared_faces):
                return False
        if s < m - 1 and len(shared_faces) == len(faces):
            return False
    return True
