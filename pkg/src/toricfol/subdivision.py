"""Rational stellar subdivisions and the bookkeeping of generalised toric blow-ups.

A subdivision of a fan with m markings at the face tau adds the marking
``a_0 = sum alpha_j a_{tau_j}``.  It is stored as index ``m + 1``; logs report
it as ``0`` together with the relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cplx import ExactComplex
from .fan import FanError, MarkedFan, locate_cone, walls
from .scalar import Scalar, scalar_to_json, to_scalar

ZERO = Fraction(0)


@dataclass(frozen=True)
class SubdivisionStep:
    """One rational stellar subdivision.

    ``face`` is sorted and ``weights`` is aligned with it.  ``new_index`` is
    the storage index of the new marking (old m + 1); ``kernel_generator``
    has length m + 1 in storage order, i.e. ``sum alpha_j e_{tau_j} - e_{m+1}``.
    """

    face: tuple
    weights: tuple
    new_ray: tuple
    new_index: int
    kernel_generator: tuple

    @property
    def m_before(self) -> int:
        return self.new_index - 1

    def to_json(self) -> dict:
        return {
            "tau": list(self.face),
            "alpha": list(self.weights),
            "new_vertex": 0,
            "stored_as": self.new_index,
            "new_ray": [scalar_to_json(x) for x in self.new_ray],
            # log ordering: e_0 first, then e_1..e_m
            "kernel_generator": [scalar_to_json(self.kernel_generator[-1])]
            + [scalar_to_json(x) for x in self.kernel_generator[:-1]],
        }


def _check_weights(face, weights):
    if len(weights) != len(face):
        raise FanError(f"{len(weights)} weights given for a face with {len(face)} vertices")
    out = []
    for w in weights:
        if isinstance(w, bool) or int(w) != w or w < 1:
            raise FanError(f"weights must be positive integers, got {w!r}")
        out.append(int(w))
    return out


def rational_stellar_subdivision(fan: MarkedFan, face, weights, check: bool = True):
    """Subdivide ``fan`` at ``face`` with integer ``weights`` (aligned with ``face``).

    Returns ``(new_fan, step)``.  With ``check`` the result is validated and
    compared with the input: completeness and the fan condition must survive.
    """
    face = [int(i) for i in face]
    weights = _check_weights(face, weights)
    if len(set(face)) != len(face):
        raise FanError(f"face {face} repeats a vertex")
    if len(face) < 2:
        raise FanError("stellar subdivision needs a face with at least two vertices")
    if not fan.complex.is_face(face):
        raise FanError(f"{sorted(face)} is not a face of the fan")
    order = sorted(range(len(face)), key=lambda k: face[k])
    face = tuple(face[k] for k in order)
    weights = tuple(weights[k] for k in order)

    new_ray = tuple(
        sum((w * fan.ray(i)[c] for i, w in zip(face, weights)), ZERO) for c in range(fan.n))
    K = fan.complex.stellar_subdivision(face)
    new_fan = MarkedFan(K, list(fan.rays) + [new_ray], fan.n)
    new_fan.inherit_inverses(fan)
    g = [ZERO] * (fan.m + 1)
    for i, w in zip(face, weights):
        g[i - 1] = Fraction(w)
    g[fan.m] = Fraction(-1)
    step = SubdivisionStep(face, weights, new_ray, fan.m + 1, tuple(g))
    if check:
        before, after = fan.report, new_fan.report
        if not (after.simplicial and after.fan_condition):
            raise AssertionError(f"subdivision at {face} produced an invalid fan: {after}")
        if before.complete and not after.complete:
            raise AssertionError(f"subdivision at {face} lost completeness")
    return new_fan, step


def apply_steps(fan: MarkedFan, steps, check: bool = True):
    """Replay ``(face, weights)`` pairs or recorded steps; returns ``(fan, steps)``."""
    out = []
    for s in steps:
        face, weights = (s.face, s.weights) if isinstance(s, SubdivisionStep) else s
        fan, step = rational_stellar_subdivision(fan, face, weights, check)
        out.append(step)
    return fan, out


def blowdown_eval(step: SubdivisionStep, z):
    """The monomial map f_tau: (z_0, z_1, ..., z_m) -> (z_0^alpha_1 z_1, ..., z_m).

    ``z`` is given with the new coordinate first, as in (z_0, z_1, ..., z_m);
    entries may be scalars, ``(re, im)`` pairs or :class:`ExactComplex`.
    """
    z = [ExactComplex.coerce(x) for x in z]
    m = step.m_before
    if len(z) != m + 1:
        raise ValueError(f"expected {m + 1} coordinates, got {len(z)}")
    weight = dict(zip(step.face, step.weights))
    z0 = z[0]
    return [z0 ** weight[i] * z[i] if i in weight else z[i] for i in range(1, m + 1)]


def torus_map(step: SubdivisionStep, g):
    """phi_tau on (C^x)^{m+1}; the same monomial formula as :func:`blowdown_eval`."""
    return blowdown_eval(step, g)


def kernel_update(old_basis, step: SubdivisionStep, fan_before: MarkedFan) -> list[list[Scalar]]:
    """Basis of Ker q_tau from a basis of Ker q.

    Old vectors are extended by a zero in the new coordinate and the new
    generator is placed first.  Every output vector is checked against q_tau.
    """
    m = fan_before.m
    if step.new_index != m + 1:
        raise ValueError("step does not belong to this fan")
    out = [list(step.kernel_generator)]
    for v in old_basis:
        v = [to_scalar(x) for x in v]
        if len(v) != m:
            raise ValueError(f"kernel vector of length {len(v)} for m = {m}")
        out.append(v + [ZERO])
    q_tau = [row + [step.new_ray[c]] for c, row in enumerate(fan_before.ray_matrix())]
    for v in out:
        if any(x != 0 for x in linalg.mat_vec(q_tau, v)):
            raise ValueError("inconsistent input: q_tau does not annihilate the updated basis")
    return out


def pad(v, length: int) -> list:
    return list(v) + [ZERO] * (length - len(v))


# ---------------------------------------------------------------------------
# refinement and support functions

def refines(fine: MarkedFan, coarse: MarkedFan):
    """``(True, None)`` if every cone of ``fine`` lies in a cone of ``coarse``.

    Otherwise returns ``(False, facet)`` for an offending facet of ``fine``.
    It suffices to check facets: locate the barycenter, then test every
    generator against the closed cone found.
    """
    for f in fine.facets:
        bary = [sum((fine.ray(i)[c] for i in f), ZERO) for c in range(fine.n)]
        home = locate_cone(coarse, bary)
        if home is None:
            return False, f
        for i in f:
            c = coarse.coordinates(home, fine.ray(i))
            if c is None or any(x < 0 for x in c):
                return False, f
    return True, None


def pl_value(fan: MarkedFan, heights, x) -> Scalar:
    """Value at ``x`` of the function linear on each cone with value h_i at a_i."""
    face = locate_cone(fan, x)
    if face is None:
        raise FanError(f"point {x} lies outside the fan")
    if not face:
        return ZERO
    c = fan.coordinates(face, x)
    return sum((ci * to_scalar(heights[i - 1]) for i, ci in zip(face, c)), ZERO)


def convex_combination_certificate(h1, h2, fan: MarkedFan) -> Scalar:
    """Exact epsilon with h1 + epsilon*h2 strictly convex across every wall of ``fan``.

    ``h1`` must have nonnegative margins everywhere; walls where it has margin
    zero must have positive ``h2`` margin.  The canonical epsilon is half the
    smallest ratio ``margin(h1) / -margin(h2)`` over walls with negative
    ``h2`` margin, and 1 when no wall needs repair.
    """
    h1 = [to_scalar(x) for x in h1]
    h2 = [to_scalar(x) for x in h2]
    bound = None
    for w in walls(fan):
        m1, m2 = w.margin(h1), w.margin(h2)
        if m1 < 0:
            raise FanError(f"first function is concave across the wall {w.ridge}")
        if m1 == 0 and m2 <= 0:
            raise FanError(f"no combination is strictly convex across the wall {w.ridge}")
        if m2 < 0:
            r = m1 / -m2
            bound = r if bound is None or r < bound else bound
    eps = Fraction(1) if bound is None else bound / 2
    combined = [a + eps * b for a, b in zip(h1, h2)]
    if not all(w.margin(combined) > 0 for w in walls(fan)):  # pragma: no cover
        raise AssertionError("combined heights fail to re-verify")
    return eps
