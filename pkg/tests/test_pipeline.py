import random

import pytest

from toricfol.arrangement import hyperplane_refinement
from toricfol.corpus import (hexagon_fan, projective_plane_fan, projective_plane_with_ghost,
                             simplex_fan, sqrt2_plane_fan, square_fan)
from toricfol.cplx import ExactComplex
from toricfol.fan import FanError, MarkedFan, is_polytopal, locate_cone, validate_fan, walls
from toricfol.foliation import HSubspace, validate_h
from toricfol.pipeline import (chow_pipeline, polytopalize, rationalize_rays, refine_by_stellar,
                               support_heights, tent_heights)
from toricfol.scalar import is_rational
from toricfol.subdivision import rational_stellar_subdivision, refines


def _p2_with(extra):
    rays = [(1, 0), (0, 1), (-1, -1)] + list(extra)
    return rays


def test_arrangement_of_p2():
    arr = hyperplane_refinement(projective_plane_fan())
    assert arr.fan.m == 6
    assert validate_fan(arr.fan).ok and is_polytopal(arr.fan).polytopal
    assert refines(arr.fan, projective_plane_fan())[0]


def test_arrangement_identity_on_square():
    arr = hyperplane_refinement(square_fan())
    assert arr.fan.m == 4 and arr.new_rays == {}


def test_arrangement_rejects_incomplete_and_high_dimension():
    with pytest.raises(FanError):
        hyperplane_refinement(simplex_fan(4))
    cone = MarkedFan.from_faces([(1, 0), (0, 1)], [[1, 2]])
    with pytest.raises(FanError):
        hyperplane_refinement(cone)


def test_rationalize_sqrt2_fan():
    fan = sqrt2_plane_fan()
    arr = hyperplane_refinement(fan).fan
    out = rationalize_rays(arr, fan)
    assert validate_fan(out).ok and is_polytopal(out).polytopal
    for j in range(fan.m + 1, out.m + 1):
        face = locate_cone(fan, out.ray(j))
        c = fan.coordinates(face, out.ray(j))
        assert all(is_rational(x) and x.denominator == 1 and x > 0 for x in c)


def test_refine_2d_mediants():
    fan = projective_plane_fan()
    target = MarkedFan.from_faces(_p2_with([(2, 1)]), [[1, 4], [4, 2], [2, 3], [1, 3]])
    steps, final = refine_by_stellar(fan, target)
    assert [s.new_ray for s in steps] == [(1, 1), (2, 1)]
    assert all(s.weights == (1, 1) for s in steps)
    assert refines(final, target)[0]


def test_refine_2d_order_independent():
    fan = projective_plane_fan()
    a = MarkedFan.from_faces(_p2_with([(1, 2), (3, 1)]),
                             [[1, 5], [5, 4], [4, 2], [2, 3], [1, 3]])
    b = MarkedFan.from_faces(_p2_with([(3, 1), (1, 2)]),
                             [[1, 4], [4, 5], [5, 2], [2, 3], [1, 3]])
    sa, _ = refine_by_stellar(fan, a)
    sb, _ = refine_by_stellar(fan, b)
    assert [s.new_ray for s in sa] == [s.new_ray for s in sb]


def test_refine_to_self_is_empty():
    steps, final = refine_by_stellar(hexagon_fan(), hexagon_fan())
    assert steps == [] and final.m == 6


def test_refine_3d_small_target():
    fan = simplex_fan(3)
    target, _ = rational_stellar_subdivision(fan, [1, 2, 3], [1, 2, 3])
    target, _ = rational_stellar_subdivision(target, [1, 4], [1, 1])
    steps, final = refine_by_stellar(fan, target)
    assert steps
    assert refines(final, target)[0] and validate_fan(final).ok


def test_polytopalize_identity_on_polytopal():
    res = polytopalize(projective_plane_fan())
    assert res.steps == [] and res.certificate.polytopal
    assert polytopalize(hexagon_fan()).steps == []


def test_polytopalize_rejects():
    with pytest.raises(FanError):
        polytopalize(simplex_fan(4))
    with pytest.raises(FanError):
        polytopalize(MarkedFan.from_faces([(1, 0), (0, 1)], [[1, 2]]))


def _strict(fan, h):
    return all(w.margin(h) > 0 for w in walls(fan))


def test_tent_and_support_heights_certify_random_refinement():
    rng = random.Random(3)
    fan = simplex_fan(3)
    cur, steps = fan, []
    for _ in range(10):
        faces = sorted(sorted(f) for f in cur.complex.faces if len(f) >= 2)
        face = rng.choice(faces)
        cur, step = rational_stellar_subdivision(cur, face, [rng.randint(1, 3) for _ in face])
        steps.append(step)
    h = support_heights(fan, steps, cur, fan)
    assert _strict(cur, h)
    cert = is_polytopal(cur, hint=h)
    assert cert.polytopal
    assert len(tent_heights(fan, steps)) == cur.m


I = ExactComplex(0, 1)
ONE = ExactComplex(1)


def test_chow_without_steps():
    h = HSubspace(4, [[ONE, I, ONE, I]])
    res = chow_pipeline(square_fan(), h)
    assert res.steps == [] and res.h_prime.dim == 1


def test_chow_forced_steps_on_ghost_fan():
    fan = projective_plane_with_ghost()
    h = HSubspace(fan.m, [[ONE, ONE, ONE, I]])
    res = chow_pipeline(fan, h, forced_steps=[([1, 2], [1, 1]), ([2, 3], [1, 2])])
    assert len(res.steps) == 2 and res.h0.dim == 1 and res.h_prime.dim == 2
    assert validate_h(res.fan, res.h_prime).ok


def test_chow_odd_steps_are_evened():
    h = HSubspace(4, [[ONE, I, ONE, I]])
    res = chow_pipeline(square_fan(), h, forced_steps=[([1, 2], [1, 1])])
    assert len(res.steps) == 2
    g1, g2 = res.kernel_generators
    assert res.h0.basis == [[ExactComplex(a, b) for a, b in zip(g1, g2)]]
