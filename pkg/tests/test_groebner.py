from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricfol import groebner as gb
from toricfol.facering import build_presentation
from toricfol.corpus import hexagon_fan, projective_plane_fan, square_fan

M = 3
SYMS = sympy.symbols("v1:%d" % (M + 1))


def to_sympy(p, syms):
    return sum((sympy.Rational(c.numerator, c.denominator)
                * sympy.Mul(*[s ** e for s, e in zip(syms, mono)]) for mono, c in p.items()),
               sympy.Integer(0))


def from_sympy(expr, syms):
    poly = sympy.Poly(expr, *syms)
    return {tuple(mono): Fraction(int(c.p), int(c.q)) for mono, c in poly.terms()}


def sympy_basis(polys, m):
    syms = sympy.symbols("v1:%d" % (m + 1))
    # our order ranks v_m highest; sympy ranks the first generator highest
    gens = list(reversed(syms))
    G = sympy.groebner([to_sympy(p, syms) for p in polys], *gens, order="grevlex")
    out = [from_sympy(g.as_expr(), syms) for g in G.exprs]
    return sorted(out, key=lambda g: gb.degrevlex_key(gb.leading(g)[0]), reverse=True)


def _monic(G):
    return [gb.scale(g, 1 / gb.leading(g)[1]) for g in G]


exponents = st.tuples(*[st.integers(0, 2)] * M)
terms = st.dictionaries(exponents, st.integers(-3, 3).filter(bool), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(st.lists(terms, min_size=1, max_size=3))
def test_buchberger_matches_sympy(raw):
    polys = [{k: Fraction(v) for k, v in p.items()} for p in raw]
    assert gb.buchberger(polys) == _monic(sympy_basis(polys, M))


def test_order_ranks_last_variable_highest():
    x1, x3 = gb.monomial(3, 1), gb.monomial(3, 3)
    assert gb.degrevlex_key(x3) > gb.degrevlex_key(x1)
    assert gb.leading(gb.linear_form([1, 1, 1]))[0] == x3


def test_face_ring_bases_match_sympy():
    for fan in (projective_plane_fan(), square_fan(), hexagon_fan()):
        gens = build_presentation(fan).generators()
        assert gb.buchberger(gens) == _monic(sympy_basis(gens, fan.m))


def test_reduce_and_standard_monomials():
    G = gb.buchberger(build_presentation(square_fan()).generators())
    assert gb.reduce(gb.var(4, 3), G) == gb.var(4, 1)
    assert len(gb.standard_monomials(G, 4, 2)) == 1
    assert gb.standard_monomials(G, 4, 3) == []


def test_format_poly():
    p = {gb.monomial(2, 1, 2): Fraction(1), gb.monomial(2, 1): Fraction(-1, 2)}
    assert gb.format_poly(p) == "v1*v2 - 1/2*v1"
    assert gb.format_poly({}) == "0"
