import random
import pytest

from toricfol import groebner as gb
from toricfol.corpus import (hexagon_fan, hopf_fan, projective_plane_fan, simplex_fan,
                             sqrt2_plane_fan, square_fan, standard_corpus)
from toricfol.facering import (build_presentation, hodge_diamond, lsop_check, poincare_pairing,
                               quotient_basis, ring_report)
from toricfol.fan import FanError, MarkedFan
from toricfol.subdivision import rational_stellar_subdivision


def ring(fan):
    return quotient_basis(build_presentation(fan))


def complete_corpus():
    return [f for f in standard_corpus().values() if f.report.ok]


def test_presentations():
    p = build_presentation(hopf_fan())
    assert p.to_json()["stanley_reisner"] == ["v3", "v1*v2"]
    assert p.to_json()["linear"] == ["-v2 + v1"]
    p = build_presentation(projective_plane_fan())
    assert p.sr_generators == [(1, 2, 3)]
    assert p.to_json()["linear"] == ["-v3 + v1", "-v3 + v2"]
    p = build_presentation(square_fan())
    assert p.sr_generators == [(1, 3), (2, 4)]
    assert p.linear_forms == [[1, 0, -1, 0], [0, 1, 0, -1]]


def test_presentation_needs_complete_fan():
    with pytest.raises(FanError):
        build_presentation(MarkedFan.from_faces([(1, 0), (0, 1)], [[1, 2]]))


def test_lsop_check():
    assert lsop_check(projective_plane_fan()) == (True, None)
    assert lsop_check(hopf_fan())[0]
    dup = MarkedFan.from_faces([(1, 0), (1, 0), (0, 1)], [[1, 2], [2, 3]])
    ok, wit = lsop_check(dup)
    assert not ok and sorted(wit) == [1, 2]


def test_quotient_dims_examples():
    qb = ring(hopf_fan())
    assert qb.dims == (1, 1) and qb.monomials[1] == [gb.monomial(3, 1)]
    assert ring(projective_plane_fan()).dims == (1, 1, 1)
    qb = ring(square_fan())
    assert qb.dims == (1, 2, 1)
    assert qb.monomials[2] == [gb.monomial(4, 1, 2)]


def test_multiply():
    qb = ring(square_fan())
    v1, v2 = gb.var(4, 1), gb.var(4, 2)
    assert qb.multiply(gb.const(4), v1) == v1
    assert qb.multiply(v1, v1) == {}
    assert qb.multiply(v1, v2) == {gb.monomial(4, 1, 2): 1}


def test_poincare_pairing_examples():
    qb = ring(square_fan())
    assert poincare_pairing(qb, 0) == ([[1]], True)
    M, ok = poincare_pairing(qb, 1)
    assert ok and M == [[0, 1], [1, 0]]
    M, ok = poincare_pairing(ring(projective_plane_fan()), 1)
    assert ok and M == [[1]]


def test_hodge_diamonds():
    assert hodge_diamond(hopf_fan()).table == [[1, 0], [0, 1]]
    d = hodge_diamond(square_fan())
    assert d.table == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    assert d.betti == [1, 0, 2, 0, 1]


@pytest.mark.parametrize("name", sorted(k for k, f in standard_corpus().items() if f.report.ok))
def test_dims_equal_h_vector(name):
    fan = standard_corpus()[name]
    qb = ring(fan)
    h = fan.complex.h_vector()
    assert qb.dims == tuple(h)
    assert qb.dims == qb.dims[::-1]
    assert sum(qb.dims) == len([f for f in fan.complex.facets if f])
    for i in range(fan.n + 1):
        assert poincare_pairing(qb, i)[1]


def test_dims_invariant_under_rescaling_and_relabeling():
    fan = hexagon_fan()
    base = ring(fan).dims
    scaled = MarkedFan(fan.complex, [tuple(3 * x for x in r) for r in fan.rays], 2)
    assert ring(scaled).dims == base
    perm = [3, 1, 6, 2, 5, 4]
    rays = [None] * 6
    for old, new in enumerate(perm, 1):
        rays[new - 1] = fan.ray(old)
    faces = [[perm[i - 1] for i in f] for f in fan.facets]
    assert ring(MarkedFan.from_faces(rays, faces)).dims == base
    sheared = MarkedFan(fan.complex, [(r[0] + 2 * r[1], r[1]) for r in fan.rays], 2)
    assert ring(sheared).dims == base


def test_random_subdivisions_keep_dehn_sommerville():
    rng = random.Random(11)
    fan = simplex_fan(3)
    for _ in range(4):
        face = rng.choice(sorted(sorted(f) for f in fan.complex.faces if len(f) >= 2))
        fan, _ = rational_stellar_subdivision(fan, face, [rng.randint(1, 3) for _ in face])
    qb = ring(fan)
    assert qb.dims == tuple(fan.complex.h_vector())


def test_irrational_coefficients():
    qb = ring(sqrt2_plane_fan())
    assert qb.dims == (1, 1, 1)
    assert build_presentation(sqrt2_plane_fan()).discriminant == 2


def test_ring_report_is_json_ready():
    import json
    rep = ring_report(square_fan())
    json.dumps(rep)
    assert rep["dims"] == [1, 2, 1]
    assert [p["nondegenerate"] for p in rep["poincare_pairing"]] == [True] * 3
