"""Polytopalization by stellar subdivisions, and its foliated version.

The route is: refine by the hyperplane arrangement of the walls (always
polytopal), make the new rays lattice vectors of their containing cones,
then reach a refinement of that target with rational stellar subdivisions
at two-dimensional cones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from . import linalg
from .arrangement import hyperplane_refinement
from .cplx import ExactComplex
from .fan import FanError, MarkedFan, PolytopalityCertificate, is_polytopal, locate_cone
from .foliation import HSubspace, validate_h
from .scalar import is_rational, scalar_sign, scalar_to_json
from .subdivision import (SubdivisionStep, apply_steps, convex_combination_certificate, pad,
                          pl_value, rational_stellar_subdivision, refines)

ZERO = Fraction(0)
MAX_STEPS = 10_000


class PipelineError(FanError):
    """Raised when a search or loop gives up; ``steps`` holds the partial sequence."""

    def __init__(self, message, steps=()):
        super().__init__(message)
        self.steps = list(steps)


@dataclass
class PipelineResult:
    input_fan: MarkedFan
    steps: list
    fan: MarkedFan
    certificate: PolytopalityCertificate
    target: MarkedFan | None = None
    kernel_generators: list = field(default_factory=list)   # padded to the final m
    h0: HSubspace | None = None
    h_prime: HSubspace | None = None

    @property
    def v_dimension(self) -> int:
        return len(self.kernel_generators)

    def to_json(self) -> dict:
        from .fileio import fan_to_json, step_log
        out = {"steps": step_log(self.steps, self.input_fan.m),
               "fan": fan_to_json(self.fan),
               "certificate": certificate_json(self.certificate)}
        if self.h_prime is not None:
            out["h0"] = self.h0.to_json()
            out["h_prime"] = self.h_prime.to_json()
        return out


def certificate_json(cert: PolytopalityCertificate) -> dict:
    if cert.polytopal:
        return {"polytopal": True, "heights": [scalar_to_json(h) for h in cert.heights],
                "slack": scalar_to_json(cert.slack)}
    return {"polytopal": False,
            "refutation": [{"ridge": list(r), "multiplier": scalar_to_json(y)}
                           for r, y in sorted(cert.refutation.items())]}


# ---------------------------------------------------------------------------
# rationalization

def _round_half_up(x, B: int) -> Fraction:
    return Fraction(math.floor(x * B + Fraction(1, 2)), B)


def rationalize_rays(fine: MarkedFan, coarse: MarkedFan, bound: int = 4,
                     max_bound: int = 1 << 16) -> MarkedFan:
    """Replace every ray of ``fine`` beyond the first ``coarse.m`` by a lattice
    vector of the markings of its containing ``coarse`` cone.

    Rays with rational coordinates in that cone are only rescaled.  Other
    rays are approximated: coefficients normalized to sum one are rounded to
    denominator B, for B = bound, 2*bound, ..., and the first candidate that
    keeps the fan valid and polytopal is taken.
    """
    rays = list(fine.rays)
    for j in range(coarse.m + 1, fine.m + 1):
        if j in fine.complex.ghosts:
            continue
        face = locate_cone(coarse, fine.ray(j))
        if face is None:
            raise FanError(f"ray {j} lies outside the coarse fan")
        c = coarse.coordinates(face, fine.ray(j))
        if all(is_rational(x) for x in c):
            k = linalg.primitive_integer(c)
            rays[j - 1] = _combine(coarse, face, k)
            continue
        total = sum(c, ZERO)
        c = [x / total for x in c]
        B = bound
        while True:
            approx = [max(_round_half_up(x, B), Fraction(1, B)) for x in c]
            k = linalg.primitive_integer(approx)
            trial = list(rays)
            trial[j - 1] = _combine(coarse, face, k)
            cand = MarkedFan(fine.complex, trial, fine.n)
            if cand.report.ok and is_polytopal(cand, require_complete=False).polytopal:
                rays = trial
                break
            B *= 2
            if B > max_bound:
                raise PipelineError(f"no lattice replacement for ray {j} with denominators "
                                    f"up to {max_bound}")
    return MarkedFan(fine.complex, rays, fine.n)


def _combine(fan, face, k):
    return tuple(sum((ki * fan.ray(i)[c] for i, ki in zip(face, k)), ZERO)
                 for c in range(fan.n))


# ---------------------------------------------------------------------------
# reaching a target refinement by stellar subdivisions

def _primitive_weights(coeffs, where):
    if not all(is_rational(x) for x in coeffs):
        raise FanError(f"irrational crossing coefficients at {where}; "
                       "the target is not a rational subdivision")
    w = linalg.primitive_integer(coeffs)
    if any(x <= 0 for x in w):  # pragma: no cover - callers pass interior points
        raise FanError(f"crossing at {where} is not in a relative interior")
    return w


class _Refiner:
    def __init__(self, fan: MarkedFan, cap: int, check: bool):
        self.fan = fan
        self.steps: list[SubdivisionStep] = []
        self.cap = cap
        self.check = check

    def subdivide(self, face, weights):
        if len(self.steps) >= self.cap:
            raise PipelineError(f"iteration cap {self.cap} reached", self.steps)
        self.fan, step = rational_stellar_subdivision(self.fan, face, weights, self.check)
        self.steps.append(step)
        return step.new_index

    def insert(self, b):
        """Make the direction of ``b`` a ray of the current fan."""
        while True:
            face = locate_cone(self.fan, b)
            if face is None:
                raise FanError(f"target ray {b} lies outside the fan")
            if len(face) == 1:
                return face[0]
            if self.fan.n == 2:
                self.subdivide(face, (1, 1))          # mediant
                continue
            c = self.fan.coordinates(face, b)
            if len(face) == 2:
                self.subdivide(face, _primitive_weights(c, face))
                continue
            # interior of a 3-cone: cut the edge opposite the first vertex
            # along the plane through that vertex and b, then the new edge
            x, y, z = face
            p = self.subdivide((y, z), _primitive_weights(c[1:], (y, z)))
            cx = self.fan.coordinates((x, p), b)
            self.subdivide((x, p), _primitive_weights(cx, (x, p)))


def _target_order(coarse: MarkedFan, target: MarkedFan):
    """New target rays in a canonical order independent of their labels."""
    new = [j for j in range(coarse.m + 1, target.m + 1) if j not in target.complex.ghosts]
    if target.n == 2:
        def cmp(a, b):
            u, v = target.ray(a), target.ray(b)
            hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
            hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
            if hu != hv:
                return hu - hv
            return -scalar_sign(u[0] * v[1] - u[1] * v[0])
        return sorted(new, key=cmp_to_key(cmp))

    def key(j):
        face = locate_cone(coarse, target.ray(j))
        c = coarse.coordinates(face, target.ray(j))
        total = sum(c, ZERO)
        return (face, tuple(x / total for x in c))
    return sorted(new, key=key)


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def refine_by_stellar(fan: MarkedFan, target: MarkedFan, cap: int = MAX_STEPS,
                      check_each: bool = False):
    """Stellar subdivisions at 2-cones of ``fan`` until it refines ``target``.

    ``target`` must carry the rays of ``fan`` as its first markings.  In the
    plane every step is a mediant insertion (weights (1, 1)), so each target
    ray is reached along a Stern-Brocot path.  In space the target rays are
    inserted first, then every current edge crossing the relative interior
    of a target wall is cut at the crossing point, until no edge crosses any
    wall; the fan then refines the target.  A cut point lies on the wall, so
    the edges it creates never cross that wall again and each wall needs as
    many cuts as edges crossed it when its turn came.

    Intermediate fans are validated only with ``check_each``; the final fan
    is always validated.  Returns ``(steps, final_fan)``.
    """
    if fan.n not in (1, 2, 3):
        raise FanError("refinement by stellar subdivisions is implemented for n <= 3")
    r = _Refiner(fan, cap, check_each)
    if fan.n == 1:
        return [], fan
    for j in _target_order(fan, target):
        r.insert(target.ray(j))
    if fan.n == 3:
        _cut_walls(r, target)
    if not r.fan.report.ok:  # pragma: no cover - stellar steps preserve validity
        raise PipelineError(f"final fan failed validation: {r.fan.report}", r.steps)
    ok, wit = refines(r.fan, target)
    if not ok:  # pragma: no cover - guaranteed by the loop invariants
        raise PipelineError(f"final fan does not refine the target at facet {wit}", r.steps)
    return r.steps, r.fan


def _cut_walls(r: _Refiner, target: MarkedFan):
    walls = []
    for e in sorted(target.complex.faces_of_size(2)):
        u, w = sorted(e)
        walls.append((target.ray(u), target.ray(w), _cross(target.ray(u), target.ray(w))))
    changed = True
    while changed:
        changed = False
        for u, w, nu in walls:
            # signed distances to the wall plane, extended linearly as rays are added
            val = {i: linalg.dot(nu, r.fan.ray(i)) for i in r.fan.complex.vertices}
            side = {i: scalar_sign(v) for i, v in val.items()}
            while True:
                hit = _crossing_edge(r.fan, u, w, nu, val, side)
                if hit is None:
                    break
                (x, y), coeffs = hit
                weights = _primitive_weights(coeffs, (x, y))
                new = r.subdivide((x, y), weights)
                val[new] = weights[0] * val[x] + weights[1] * val[y]
                side[new] = scalar_sign(val[new])
                changed = True


def _crossing_edge(fan: MarkedFan, u, w, nu, val, side):
    """First edge of ``fan`` crossing the open 2-cone spanned by u and w (normal nu)."""
    for e in sorted(fan.complex.faces_of_size(2)):
        x, y = sorted(e)
        if side[x] * side[y] >= 0:
            continue
        dx, dy = val[x], val[y]
        s, t = (-dy, dx) if dx > 0 else (dy, -dx)
        c = [s * a + t * b for a, b in zip(fan.ray(x), fan.ray(y))]
        # c is on the plane; inside the open wall iff it lies strictly between u and w
        if scalar_sign(linalg.dot(_cross(u, c), nu)) > 0 and \
                scalar_sign(linalg.dot(_cross(c, w), nu)) > 0:
            return (x, y), [s, t]
    return None


# ---------------------------------------------------------------------------
# support functions along a subdivision sequence

def tent_heights(fan: MarkedFan, steps) -> list:
    """Heights strictly concave across every wall created by ``steps``.

    Starting from zero on ``fan``, each step gives its new ray the value of
    the current function plus a small bump epsilon_t.  The bump is concave
    across the walls inside the subdivided star and may be convex across
    its boundary; epsilon_t is half the largest value that keeps every
    earlier created wall strictly concave.  Walls lying inside walls of
    ``fan`` are not constrained.
    """
    h = [ZERO] * fan.m
    carrier = {i: frozenset([i]) for i in fan.complex.vertices}
    for step in steps:
        v = step.new_index
        carrier[v] = frozenset().union(*(carrier[i] for i in step.face))
        fan, _ = rational_stellar_subdivision(fan, step.face, step.weights, check=False)
        base = sum((w * h[i - 1] for i, w in zip(step.face, step.weights)), ZERO)
        h.append(base)
        bound = None
        ridges = fan.complex.ridges()
        for r, fs in ridges.items():
            if len(fs) != 2 or not any(v in f for f in fs):
                continue
            if len(frozenset().union(*(carrier[i] for i in r))) < fan.n:
                continue        # inside a wall of the starting fan
            f1, f2 = sorted(fs, key=sorted)
            (k,) = f2 - r
            coeffs = dict(zip(sorted(f1), fan.coordinates(sorted(f1), fan.ray(k))))
            m0 = sum((c * h[i - 1] for i, c in coeffs.items()), ZERO) - h[k - 1]
            slope = coeffs.get(v, ZERO) - (1 if k == v else 0)
            if m0 <= 0 and slope <= 0:  # pragma: no cover - excluded by the argument above
                raise AssertionError(f"wall {sorted(r)} cannot be made strictly concave")
            if slope < 0:
                ratio = m0 / -slope
                bound = ratio if bound is None or ratio < bound else bound
        h[v - 1] = base + (Fraction(1) if bound is None else bound / 2)
    return h


def support_heights(fan: MarkedFan, steps, final: MarkedFan, target: MarkedFan):
    """Certificate heights for ``final``: target support function plus a small tent sum.

    The target certificate is concave across target walls and linear inside
    target cones; the tent sum repairs the walls inside target cones, none of
    which lies in a wall of ``fan``.
    """
    tcert = is_polytopal(target)
    if not tcert.polytopal:
        raise PipelineError("the refinement target is not polytopal", steps)
    h1 = [pl_value(target, tcert.heights, final.ray(i)) if i not in final.complex.ghosts
          else ZERO for i in range(1, final.m + 1)]
    h2 = tent_heights(fan, steps)
    eps = convex_combination_certificate(h1, h2, final)
    return [a + eps * b for a, b in zip(h1, h2)]


# ---------------------------------------------------------------------------
# drivers

def polytopalize(fan: MarkedFan, cap: int = MAX_STEPS) -> PipelineResult:
    """Stellar subdivisions of a complete fan (n <= 3) ending in a polytopal fan."""
    rep = fan.report
    if not rep.complete:
        raise FanError(f"polytopalization needs a complete simplicial fan: {rep.complete_witness}")
    if fan.n > 3:
        raise FanError(f"polytopalization is implemented for n <= 3, got n = {fan.n}")
    cert = is_polytopal(fan)
    if cert.polytopal:
        return PipelineResult(fan, [], fan, cert)
    arrangement = hyperplane_refinement(fan).fan
    target = rationalize_rays(arrangement, fan)
    steps, final = refine_by_stellar(fan, target, cap)
    cert = is_polytopal(final, hint=support_heights(fan, steps, final, target))
    if not cert.polytopal:  # pragma: no cover - refinement of a polytopal fan by stellar steps
        raise PipelineError("final fan is not polytopal", steps)
    ok, wit = refines(final, fan)
    if not ok:  # pragma: no cover
        raise PipelineError(f"final fan does not refine the input at {wit}", steps)
    return PipelineResult(fan, steps, final, cert, target)


def chow_pipeline(fan: MarkedFan, h: HSubspace, forced_steps=None,
                  cap: int = MAX_STEPS) -> PipelineResult:
    """Polytopalize and extend h by a half-dimensional subspace of the new kernel.

    ``forced_steps`` replaces the polytopalization by an explicit list of
    ``(face, weights)`` subdivisions.  An odd number of steps is evened out
    by one more subdivision at the first maximal cone with unit weights.
    The new kernel generators g_1, g_2, ... are paired as g_1 + i g_2, ...
    """
    rep = validate_h(fan, h)
    if not rep.ok:
        raise FanError(f"h is not valid for this fan: {rep}")
    if forced_steps is not None:
        final, steps = apply_steps(fan, forced_steps)
        result = PipelineResult(fan, steps, final, is_polytopal(final))
    else:
        result = polytopalize(fan, cap)
    if len(result.steps) % 2:
        facet = result.fan.facets[0]
        if len(facet) < 2:
            raise FanError("cannot even out the number of steps for a one-dimensional fan")
        final, extra = rational_stellar_subdivision(result.fan, facet, [1] * len(facet))
        result.steps.append(extra)
        result.fan = final
        result.certificate = is_polytopal(final)
    m_final = result.fan.m
    gens = [pad(s.kernel_generator, m_final) for s in result.steps]
    result.kernel_generators = gens
    h0 = HSubspace(m_final, [
        [ExactComplex(a, b) for a, b in zip(gens[2 * t], gens[2 * t + 1])]
        for t in range(len(gens) // 2)])
    h_prime = HSubspace(m_final, h0.basis + h.extended(m_final).basis)
    check = validate_h(result.fan, h_prime)
    if not check.ok:  # pragma: no cover - the g_t are independent and vanish under q'
        raise AssertionError(f"extended h fails validation: {check}")
    result.h0, result.h_prime = h0, h_prime
    return result
