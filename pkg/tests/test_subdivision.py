import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import planar_fans

from toricfol.corpus import projective_plane_fan, simplex_fan, square_fan
from toricfol.cplx import ExactComplex
from toricfol.fan import FanError, MarkedFan, validate_fan
from toricfol.foliation import kernel_of_q
from toricfol.linalg import mat_vec
from toricfol.subdivision import (apply_steps, blowdown_eval, convex_combination_certificate,
                                  kernel_update, pl_value, rational_stellar_subdivision, refines,
                                  torus_map)


def test_subdivision_unit_weights():
    fan, step = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [1, 1])
    assert step.new_ray == (1, 1) and step.new_index == 4
    assert fan.complex.h_vector() == (1, 2, 1)
    assert validate_fan(fan).ok
    assert step.kernel_generator == (1, 1, 0, -1)


def test_subdivision_weighted_same_complex():
    a, _ = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [1, 1])
    b, step = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [2, 1])
    assert step.new_ray == (2, 1)
    assert a.complex == b.complex and a.rays != b.rays


def test_weights_follow_face_order():
    _, s = rational_stellar_subdivision(projective_plane_fan(), [2, 1], [1, 2])
    assert s.face == (1, 2) and s.weights == (2, 1) and s.new_ray == (2, 1)


@pytest.mark.parametrize("face,weights", [([1, 2], [0, 1]), ([1, 2], [1]), ([1], [1]),
                                          ([1, 1], [1, 1]), ([1, 2], [Fraction(1, 2), 1])])
def test_subdivision_rejects(face, weights):
    with pytest.raises(FanError):
        rational_stellar_subdivision(projective_plane_fan(), face, weights)


def test_subdivision_rejects_non_face():
    with pytest.raises(FanError):
        rational_stellar_subdivision(square_fan(), [1, 3], [1, 1])


def test_step_json_uses_index_zero():
    _, step = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [2, 1])
    js = step.to_json()
    assert js["new_vertex"] == 0 and js["stored_as"] == 4
    assert js["kernel_generator"] == [-1, 2, 1, 0]


def test_facet_subdivision_count():
    fan = simplex_fan(3)
    new, _ = rational_stellar_subdivision(fan, [1, 2, 3], [1, 1, 1])
    assert len(new.complex.facets) == len(fan.complex.facets) + 2


def test_blowdown_examples():
    _, s11 = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [1, 1])
    ys = [ExactComplex(3, 1), ExactComplex(0, 2), ExactComplex(5)]
    assert blowdown_eval(s11, [1] + ys) == ys
    out = blowdown_eval(s11, [0, 7, 8, 9])
    assert out[0] == 0 and out[1] == 0 and out[2] == 9
    _, s21 = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [2, 1])
    assert blowdown_eval(s21, [2, 1, 1, 5]) == [4, 2, 5]
    with pytest.raises(ValueError):
        blowdown_eval(s21, [1, 2, 3])


gaussian = st.builds(ExactComplex, st.integers(-3, 3), st.integers(-3, 3))


@settings(max_examples=60)
@given(st.lists(gaussian, min_size=4, max_size=4), st.lists(gaussian, min_size=4, max_size=4),
       st.integers(1, 3), st.integers(1, 3))
def test_blowdown_equivariant(g, z, a1, a2):
    _, step = rational_stellar_subdivision(projective_plane_fan(), [1, 2], [a1, a2])
    gz = [x * y for x, y in zip(g, z)]
    lhs = blowdown_eval(step, gz)
    rhs = [x * y for x, y in zip(torus_map(step, g), blowdown_eval(step, z))]
    assert lhs == rhs


def test_kernel_update_example():
    fan = projective_plane_fan()
    _, step = rational_stellar_subdivision(fan, [1, 2], [1, 1])
    new = kernel_update([[1, 1, 1]], step, fan)
    assert new == [[1, 1, 0, -1], [1, 1, 1, 0]]


def test_kernel_update_empty_and_inconsistent():
    fan = MarkedFan.from_faces([(1, 0), (0, 1)], [[1, 2]])
    _, step = rational_stellar_subdivision(fan, [1, 2], [1, 1])
    assert kernel_update([], step, fan) == [list(step.kernel_generator)]
    with pytest.raises(ValueError):
        kernel_update([[1, 0]], step, fan)


def test_refines():
    fan = projective_plane_fan()
    fine, _ = rational_stellar_subdivision(fan, [1, 2], [1, 1])
    assert refines(fine, fan) == (True, None)
    ok, wit = refines(fan, fine)
    assert not ok and wit is not None


def test_pl_value():
    fan = projective_plane_fan()
    h = [Fraction(-1), Fraction(-2), Fraction(0)]
    assert pl_value(fan, h, (2, 1)) == -4
    assert pl_value(fan, h, (-1, -3)) == -2


def test_convex_combination_single_wall():
    fan = MarkedFan.from_faces([(1,), (-1,)], [[1], [2]])
    eps = convex_combination_certificate([-1, -1], [1, 0], fan)
    assert eps == 1


def test_convex_combination_no_repair_needed():
    fan = projective_plane_fan()
    assert convex_combination_certificate([0, 0, -1], [0, 0, -1], fan) == 1


def test_apply_steps_and_random_refinement():
    rng = random.Random(7)
    fan = simplex_fan(3)
    steps = []
    for _ in range(8):
        faces = [f for f in fan.complex.faces if len(f) >= 2]
        face = sorted(rng.choice(faces))
        fan, step = rational_stellar_subdivision(fan, face, [rng.randint(1, 3) for _ in face])
        steps.append((step.face, step.weights))
    assert validate_fan(fan).ok
    again, _ = apply_steps(simplex_fan(3), steps)
    assert again.rays == fan.rays and again.complex == fan.complex
    assert refines(fan, simplex_fan(3))[0]


@settings(max_examples=25, deadline=None)
@given(planar_fans(), st.data())
def test_planar_subdivision_keeps_fan(fan, data):
    edges = sorted(f for f in fan.complex.facets if len(f) == 2)
    face = data.draw(st.sampled_from(edges))
    w = data.draw(st.lists(st.integers(1, 4), min_size=2, max_size=2))
    new, step = rational_stellar_subdivision(fan, sorted(face), w)
    assert validate_fan(new).ok
    assert new.m == fan.m + 1
    q = kernel_of_q(new)
    assert all(all(x == 0 for x in mat_vec(new.ray_matrix(), v)) for v in q)
