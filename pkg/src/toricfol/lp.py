"""Exact two-phase simplex over an ordered field, Bland's pivot rule.

The tableau is stored as sparse dict rows, which keeps the large but very
sparse polytopality programs tractable in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain

from .linalg import primitive_integer
from .scalar import Scalar, is_rational, to_scalar

try:  # GMP rationals make the rational tableau several times faster
    from gmpy2 import mpq
except ImportError:  # pragma: no cover
    mpq = None

ZERO = Fraction(0)

LE, EQ, GE = "<=", "=", ">="


@dataclass(frozen=True)
class LpResult:
    """Outcome of :func:`lp_solve`.

    ``status`` is ``"feasible"`` (with ``optimum`` and ``point``),
    ``"infeasible"`` (with Farkas multipliers in ``farkas``, one per
    constraint) or ``"unbounded"``.
    """

    status: str
    optimum: Scalar | None = None
    point: tuple | None = None
    farkas: tuple | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.red: dict[int, Scalar] = {}
        self.z = 0

    def set_objective(self, cost: dict[int, Scalar]):
        red = dict(cost)
        z = 0
        for row, b, j in zip(self.rows, self.rhs, self.basis):
            cb = cost.get(j)
            if cb:
                z += cb * b
                for c, v in row.items():
                    nv = red.get(c, 0) - cb * v
                    if nv == 0:
                        red.pop(c, None)
                    else:
                        red[c] = nv
        self.red = red
        self.z = z

    def pivot(self, r: int, q: int):
        prow = self.rows[r]
        inv = 1 / prow[q]
        prow = {c: v * inv for c, v in prow.items()}
        prow[q] = 1
        self.rows[r] = prow
        br = self.rhs[r] * inv
        self.rhs[r] = br
        items = list(prow.items())
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            a = row.get(q)
            if a is None:
                continue
            for c, v in items:
                nv = row.get(c, 0) - a * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
            self.rhs[i] = self.rhs[i] - a * br
        a = self.red.get(q)
        if a is not None:
            for c, v in items:
                nv = self.red.get(c, 0) - a * v
                if nv == 0:
                    self.red.pop(c, None)
                else:
                    self.red[c] = nv
            self.z = self.z + a * br
        self.basis[r] = q

    def run(self, allowed=None, max_iter: int = 1_000_000) -> str:
        for _ in range(max_iter):
            cands = [j for j, v in self.red.items() if v > 0 and (allowed is None or allowed(j))]
            if not cands:
                return "optimal"
            q = min(cands)
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(q)
                if a is not None and a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], q)
        raise RuntimeError("simplex iteration limit reached")


def _standard_simplex(rows, rhs, cost, ncols, basis_hint):
    """Maximize cost.x subject to rows.x = rhs (rhs >= 0), x >= 0.

    ``basis_hint[i]`` names a unit column for row i, or ``None``.
    Returns ``(status, x, value)``; when infeasible, ``x`` holds the phase-one
    dual values y with y.A >= 0 and y.rhs < 0.
    """
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    basis = []
    art_start = ncols
    k = art_start
    phase1 = {}
    for i, h in enumerate(basis_hint):
        if h is None:
            rows[i][k] = 1
            basis.append(k)
            phase1[k] = -1
            k += 1
        else:
            basis.append(h)
    tab = _Tableau(rows, rhs, basis)
    if phase1:
        tab.set_objective(phase1)
        tab.run()
        if tab.z < 0:
            # dual values from the unit column of each row: y_k = cost - reduced cost
            unit = []
            k = art_start
            for h in basis_hint:
                if h is None:
                    unit.append((k, -1))
                    k += 1
                else:
                    unit.append((h, 0))
            duals = [c - tab.red.get(j, 0) for j, c in unit]
            return "infeasible", duals, None
        # drive remaining artificials out of the basis
        drop = []
        for i, j in enumerate(tab.basis):
            if j >= art_start:
                col = next((c for c in sorted(tab.rows[i]) if c < art_start), None)
                if col is None:
                    drop.append(i)
                else:
                    tab.pivot(i, col)
        for i in reversed(drop):
            del tab.rows[i]
            del tab.rhs[i]
            del tab.basis[i]
        for row in tab.rows:
            for c in [c for c in row if c >= art_start]:
                del row[c]
    tab.set_objective({j: v for j, v in cost.items() if v != 0})
    status = tab.run(allowed=lambda j: j < art_start)
    if status == "unbounded":
        return "unbounded", None, None
    x = [0] * ncols
    for i, j in enumerate(tab.basis):
        x[j] = tab.rhs[i]
    return "optimal", x, tab.z


def _back(v) -> Scalar:
    """Return to Fraction / QuadScalar after a GMP computation."""
    if mpq is not None and isinstance(v, type(mpq())):
        return Fraction(int(v.numerator), int(v.denominator))
    if isinstance(v, int):
        return Fraction(v)
    return v


def _normalize_certificate(y):
    if all(is_rational(v) for v in y) and any(v != 0 for v in y):
        return tuple(Fraction(v) for v in primitive_integer(y))
    return tuple(y)


def lp_solve(objective, constraints, nonneg=()) -> LpResult:
    """Maximize ``objective . x`` subject to ``constraints``.

    ``constraints`` is a sequence of ``(coefficients, relation, rhs)`` with
    relation one of ``"<="``, ``"="``, ``">="``.  Variables are free unless
    their index appears in ``nonneg``.

    Infeasible systems return Farkas multipliers ``y`` (``y_k >= 0`` for
    ``<=`` rows, ``<= 0`` for ``>=`` rows, free for ``=`` rows) with
    ``sum y_k a_k`` zero on free variables and nonnegative on nonnegative
    ones, and ``sum y_k b_k < 0``.
    """
    objective = [to_scalar(c) for c in objective]
    nvar = len(objective)
    nonneg = set(nonneg)
    cons = [([to_scalar(a) for a in vec], rel, to_scalar(b)) for vec, rel, b in constraints]
    for vec, rel, _ in cons:
        if len(vec) != nvar:
            raise ValueError("constraint length does not match the objective")
        if rel not in (LE, EQ, GE):
            raise ValueError(f"unknown relation {rel!r}")

    # column layout: x_j = col_pos[j] - col_neg[j]
    col_pos, col_neg = [], []
    ncols = 0
    for j in range(nvar):
        col_pos.append(ncols)
        ncols += 1
        if j in nonneg:
            col_neg.append(None)
        else:
            col_neg.append(ncols)
            ncols += 1

    rows, rhs, hints, signs = [], [], [], []
    for vec, rel, b in cons:
        sgn = -1 if rel == GE else 1
        row = {}
        for j, a in enumerate(vec):
            if a != 0:
                a = a * sgn
                row[col_pos[j]] = a
                if col_neg[j] is not None:
                    row[col_neg[j]] = -a
        b = b * sgn
        hint = None
        if rel != EQ:
            row[ncols] = 1
            slack = ncols
            ncols += 1
            if b >= 0:
                hint = slack
        flip = 1
        if b < 0:
            row = {c: -v for c, v in row.items()}
            b = -b
            flip = -1
        signs.append(sgn * flip)
        rows.append(row)
        rhs.append(b)
        hints.append(hint)

    cost = {}
    for j, c in enumerate(objective):
        if c != 0:
            cost[col_pos[j]] = c
            if col_neg[j] is not None:
                cost[col_neg[j]] = -c

    fast = mpq is not None and all(
        is_rational(v) for v in chain(rhs, cost.values(), *(r.values() for r in rows)))
    if fast:
        rows = [{c: mpq(v.numerator, v.denominator) for c, v in r.items()} for r in rows]
        rhs = [mpq(b.numerator, b.denominator) for b in rhs]
        cost = {c: mpq(v.numerator, v.denominator) for c, v in cost.items()}
    status, x, value = _standard_simplex(rows, rhs, cost, ncols, hints)
    if x is not None:
        x = [_back(v) for v in x]
    if value is not None:
        value = _back(value)
    if status == "unbounded":
        return LpResult("unbounded")
    if status == "optimal":
        point = tuple(
            x[col_pos[j]] - (x[col_neg[j]] if col_neg[j] is not None else ZERO)
            for j in range(nvar))
        return LpResult("feasible", value, point)
    y = _normalize_certificate([d * sg for d, sg in zip(x, signs)])
    if not check_farkas(cons, y, nonneg):  # pragma: no cover - Farkas' lemma
        raise RuntimeError("phase-one duals do not certify infeasibility")
    return LpResult("infeasible", farkas=y)


def check_point(constraints, point, nonneg=()) -> bool:
    """Exact re-evaluation of every constraint at ``point``."""
    for j in nonneg:
        if point[j] < 0:
            return False
    for vec, rel, b in constraints:
        lhs = sum((to_scalar(a) * x for a, x in zip(vec, point)), ZERO)
        b = to_scalar(b)
        if rel == LE and not lhs <= b:
            return False
        if rel == GE and not lhs >= b:
            return False
        if rel == EQ and lhs != b:
            return False
    return True


def check_farkas(constraints, y, nonneg=()) -> bool:
    """Verify that multipliers ``y`` combine ``constraints`` into ``0 <= negative``."""
    if y is None or len(y) != len(constraints):
        return False
    nvar = len(constraints[0][0]) if constraints else 0
    for yk, (_, rel, _) in zip(y, constraints):
        if rel == LE and yk < 0:
            return False
        if rel == GE and yk > 0:
            return False
    for j in range(nvar):
        s = sum((yk * to_scalar(vec[j]) for yk, (vec, _, _) in zip(y, constraints)), ZERO)
        if j in nonneg:
            if s < 0:
                return False
        elif s != 0:
            return False
    total = sum((yk * to_scalar(b) for yk, (_, _, b) in zip(y, constraints)), ZERO)
    return total < 0


def verify(objective, constraints, result: LpResult, nonneg=()) -> bool:
    """Re-verify an :class:`LpResult` by exact substitution."""
    if result.status == "feasible":
        if not check_point(constraints, result.point, nonneg):
            return False
        value = sum((to_scalar(c) * x for c, x in zip(objective, result.point)), ZERO)
        return value == result.optimum
    if result.status == "infeasible":
        return check_farkas(constraints, result.farkas, nonneg)
    return True
