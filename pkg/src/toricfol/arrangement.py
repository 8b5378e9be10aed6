"""The fan of the central arrangement spanned by the walls of a complete fan.

Only n <= 3.  In the plane the arrangement fan has the rays +-a_i in
angular order.  In space every pair of distinct wall planes meets in a line
giving two rays; chambers are found as sign vectors next to the arcs between
consecutive rays on each plane, and each chamber (a pointed cone over a
convex polygon) is triangulated by coning from its least ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from . import linalg
from .complexes import SimplicialComplex
from .fan import FanError, MarkedFan, locate_cone, validate_fan
from .scalar import is_rational, scalar_sign

ZERO = Fraction(0)


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def _det3(a, b, c):
    return linalg.dot(a, _cross(b, c))


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _same_direction(u, v) -> bool:
    """u and v are positive multiples of each other."""
    k = next(i for i, x in enumerate(u) if x != 0)
    if v[k] == 0 or scalar_sign(u[k]) != scalar_sign(v[k]):
        return False
    ratio = v[k] / u[k]
    return all(ratio * a == b for a, b in zip(u, v))


def _normalize(v):
    """Positive rescaling to a canonical representative of the direction."""
    v = [x for x in v]
    if all(is_rational(x) for x in v):
        return [Fraction(x) for x in linalg.primitive_integer(v)]
    k = next(i for i, x in enumerate(v) if x != 0)
    s = abs(v[k])
    return [x / s for x in v]


def _direction_index(dirs, v):
    for k, u in enumerate(dirs):
        if _same_direction(u, v):
            return k
    return None


@dataclass
class ArrangementFan:
    fan: MarkedFan
    new_rays: dict          # index -> smallest cone of the input containing it


def hyperplane_refinement(fan: MarkedFan) -> ArrangementFan:
    rep = validate_fan(fan)
    if not rep.complete:
        raise FanError(f"hyperplane refinement needs a complete fan: {rep.complete_witness}")
    if fan.n > 3:
        raise FanError(f"hyperplane refinement is implemented for n <= 3, got n = {fan.n}")
    if fan.n == 1:
        return ArrangementFan(fan, {})
    if fan.n == 2:
        out = _refine_2d(fan)
    else:
        out = _refine_3d(fan)
    new = {i: locate_cone(fan, out.ray(i)) for i in range(fan.m + 1, out.m + 1)}
    return ArrangementFan(out, new)


def _assemble(fan: MarkedFan, dirs, facets_by_dir) -> MarkedFan:
    """Build a fan keeping old indices for old directions and appending new ones."""
    index = {}
    for i in fan.complex.vertices:
        k = _direction_index(dirs, fan.ray(i))
        index[k] = i
    rays = list(fan.rays)
    extra = sorted((k for k in range(len(dirs)) if k not in index), key=lambda k: _key(dirs[k]))
    for k in extra:
        rays.append(tuple(dirs[k]))
        index[k] = len(rays)
    facets = [[index[k] for k in f] for f in facets_by_dir]
    K = SimplicialComplex(len(rays), facets)
    return MarkedFan(K, rays, fan.n)


def _key(v):
    return tuple(float(x) for x in v)


def _angle_cmp(u, v):
    """Counterclockwise order of plane vectors starting at the positive x-axis."""
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1
    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    return -scalar_sign(_det2(u, v))


def _refine_2d(fan: MarkedFan) -> MarkedFan:
    dirs = []
    for i in fan.complex.vertices:
        for sgn in (1, -1):
            v = [sgn * x for x in fan.ray(i)]
            if _direction_index(dirs, v) is None:
                dirs.append(_normalize(v) if sgn < 0 else list(fan.ray(i)))
    order = sorted(range(len(dirs)), key=cmp_to_key(lambda a, b: _angle_cmp(dirs[a], dirs[b])))
    facets = [[order[k], order[(k + 1) % len(order)]] for k in range(len(order))]
    return _assemble(fan, dirs, facets)


def _refine_3d(fan: MarkedFan) -> MarkedFan:
    # distinct wall planes
    normals = []
    for r in fan.complex.faces_of_size(2):
        i, j = sorted(r)
        nv = _normalize(_cross(fan.ray(i), fan.ray(j)))
        if _direction_index(normals, nv) is None and _direction_index(
                normals, [-x for x in nv]) is None:
            normals.append(nv)
    # arrangement rays: both directions of every pairwise intersection line
    dirs = [list(fan.ray(i)) for i in fan.complex.vertices]
    for a in range(len(normals)):
        for b in range(a + 1, len(normals)):
            line = _cross(normals[a], normals[b])
            for sgn in (1, -1):
                v = _normalize([sgn * x for x in line])
                if _direction_index(dirs, v) is None:
                    dirs.append(v)
    signs = [[scalar_sign(linalg.dot(nv, d)) for nv in normals] for d in dirs]

    # chambers: sign vectors next to each arc on each plane
    chambers = set()
    for p, nv in enumerate(normals):
        on = [k for k in range(len(dirs)) if signs[k][p] == 0]
        ordered = _circular_order(nv, [dirs[k] for k in on])
        for a in range(len(ordered)):
            u = dirs[on[ordered[a]]]
            w = dirs[on[ordered[(a + 1) % len(ordered)]]]
            mid = [x + y for x, y in zip(u, w)]
            base = [scalar_sign(linalg.dot(nq, mid)) for nq in normals]
            for side in (1, -1):
                sv = list(base)
                sv[p] = side
                chambers.add(tuple(sv))

    facets = []
    for sv in sorted(chambers):
        members = [k for k in range(len(dirs))
                   if all(s == 0 or s == t for s, t in zip(signs[k], sv))]
        facets.extend(_triangulate(dirs, members))
    return _assemble(fan, dirs, facets)


def _circular_order(axis, vecs):
    """Positions of ``vecs`` (all orthogonal to ``axis``) sorted counterclockwise."""
    if not vecs:
        return []
    ref = vecs[0]

    def half(w):
        d = scalar_sign(_det3(axis, ref, w))
        if d > 0:
            return 1
        if d < 0:
            return 3
        return 0 if _same_direction(ref, w) else 2

    def cmp(a, b):
        ha, hb = half(vecs[a]), half(vecs[b])
        if ha != hb:
            return ha - hb
        return -scalar_sign(_det3(axis, vecs[a], vecs[b]))

    return sorted(range(len(vecs)), key=cmp_to_key(cmp))


def _triangulate(dirs, members):
    """Cone over a convex polygon: fan triangulation from the least member."""
    axis = [sum((dirs[k][c] for k in members), ZERO) for c in range(3)]
    first = min(members)
    others = [k for k in members if k != first]
    ref = dirs[first]

    def key(a, b):
        ha = _side(axis, ref, dirs[a])
        hb = _side(axis, ref, dirs[b])
        if ha != hb:
            return ha - hb
        return -scalar_sign(_det3(axis, dirs[a], dirs[b]))

    others.sort(key=cmp_to_key(key))
    return [[first, others[t], others[t + 1]] for t in range(len(others) - 1)]


def _side(axis, ref, w):
    d = scalar_sign(_det3(axis, ref, w))
    return 0 if d > 0 else (1 if d == 0 else 2)
