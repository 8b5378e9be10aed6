from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricfol import linalg
from toricfol.scalar import sqrt_of

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def F(M):
    return [[Fraction(x) for x in row] for row in M]


@settings(max_examples=150)
@given(matrices())
def test_rank_matches_sympy(M):
    assert linalg.rank(F(M)) == sympy.Matrix(M).rank()


@settings(max_examples=150)
@given(matrices())
def test_kernel_basis_is_a_basis(M):
    K = linalg.kernel_basis(F(M), len(M[0]))
    assert len(K) == len(M[0]) - sympy.Matrix(M).rank()
    for v in K:
        assert all(x == 0 for x in linalg.mat_vec(F(M), v))
    if K:
        assert linalg.rank(K) == len(K)


@settings(max_examples=100)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_and_inverse_match_sympy(M):
    d = linalg.det(F(M))
    assert d == sympy.Matrix(M).det()
    inv = linalg.inverse(F(M))
    if d == 0:
        assert inv is None
    else:
        I = linalg.mat_mul(F(M), inv)
        assert I == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def test_solve_irrational_system():
    r = sqrt_of(2)
    A = [[Fraction(1), r], [Fraction(0), Fraction(1)]]
    x = linalg.solve(A, [Fraction(1), Fraction(1)])
    assert x == [1 - r, Fraction(1)]


def test_integer_kernel_rank_irrational():
    # columns 1 and -sqrt(2): no integer relation, so the lattice kernel is zero
    assert linalg.integer_kernel_rank([[Fraction(1), -sqrt_of(2)]], 2) == 0
    assert linalg.integer_kernel_rank([[Fraction(1), Fraction(-1)]], 2) == 1
    assert linalg.integer_kernel_rank([[Fraction(1), -sqrt_of(2), Fraction(0)]], 3) == 1


def test_primitive_integer():
    assert linalg.primitive_integer([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert linalg.primitive_integer([4, -6]) == [2, -3]


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4))
def test_smith_normal_form_matches_sympy(M):
    from sympy.matrices.normalforms import smith_normal_form
    D, U, V = linalg.smith_normal_form(M)
    assert linalg.mat_mul(linalg.mat_mul(U, M), V) == D
    ours = linalg.invariant_factors(M)
    S = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    theirs = [abs(int(S[i, i])) for i in range(min(S.shape)) if S[i, i] != 0]
    assert ours == theirs
    for a, b in zip(ours, ours[1:]):
        assert b % a == 0


def test_left_kernel():
    M = F([[1, 2], [2, 4], [0, 1]])
    for y in linalg.left_kernel_basis(M, 3):
        assert all(sum(y[i] * M[i][j] for i in range(3)) == 0 for j in range(2))
