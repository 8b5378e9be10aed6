from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from toricfol.lp import check_farkas, check_point, lp_solve, verify
from toricfol.scalar import sqrt_of


def test_textbook_maximum():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18
    cons = [([1, 0], "<=", 4), ([0, 2], "<=", 12), ([3, 2], "<=", 18)]
    res = lp_solve([3, 5], cons, nonneg=[0, 1])
    assert res.feasible and res.optimum == 36
    assert res.point == (Fraction(2), Fraction(6))
    assert verify([3, 5], cons, res, nonneg=[0, 1])


def test_infeasible_has_farkas_certificate():
    cons = [([1, 1], "<=", 1), ([1, 1], ">=", 2)]
    res = lp_solve([0, 0], cons, nonneg=[0, 1])
    assert res.status == "infeasible"
    assert check_farkas(cons, res.farkas, nonneg=[0, 1])


def test_unbounded():
    res = lp_solve([1, 0], [([0, 1], "<=", 1)], nonneg=[0, 1])
    assert res.status == "unbounded"


def test_equality_and_free_variables():
    cons = [([1, 1], "=", 1), ([1, -1], "<=", 0)]
    res = lp_solve([1, 0], cons)
    assert res.optimum == Fraction(1, 2)
    assert check_point(cons, res.point)


def test_irrational_data():
    r = sqrt_of(2)
    cons = [([1, 0], "<=", r), ([0, 1], "<=", 1), ([1, 1], "<=", 2)]
    res = lp_solve([1, 1], cons, nonneg=[0, 1])
    assert res.optimum == 2
    res = lp_solve([1, 0], cons, nonneg=[0, 1])
    assert res.optimum == r


coef = st.integers(-5, 5)


@settings(max_examples=120, deadline=None)
@given(st.lists(st.tuples(coef, coef, coef, st.integers(-6, 10)), min_size=1, max_size=5),
       coef, coef, coef)
def test_random_lps_match_scipy(rows, c1, c2, c3):
    cons = [([a, b, c], "<=", r) for a, b, c, r in rows]
    cons.append(([1, 1, 1], "<=", 20))
    res = lp_solve([c1, c2, c3], cons, nonneg=[0, 1, 2])
    ref = linprog([-c1, -c2, -c3], A_ub=[c for c, _, _ in cons], b_ub=[r for _, _, r in cons],
                  bounds=[(0, None)] * 3, method="highs")
    if ref.status == 2:
        assert res.status == "infeasible"
        assert check_farkas(cons, res.farkas, nonneg=[0, 1, 2])
    else:
        assert res.feasible
        assert float(res.optimum) == pytest.approx(-ref.fun, abs=1e-7)
        assert verify([c1, c2, c3], cons, res, nonneg=[0, 1, 2])
