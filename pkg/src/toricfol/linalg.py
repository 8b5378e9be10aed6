"""Exact dense linear algebra over Q and Q(sqrt(d)).

Matrices are lists of row lists of scalars; vectors are lists.  Nothing here
mutates its arguments.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalar import Scalar, rational_parts, to_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


def as_matrix(rows) -> list[list[Scalar]]:
    return [[to_scalar(x) for x in row] for row in rows]


def rref(M, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)``; ``R`` keeps only the nonzero rows.
    """
    rows = [list(r) for r in M]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def kernel_basis(M, ncols: int | None = None) -> list[list[Scalar]]:
    """Basis of the right null space {v : M v = 0}.

    One vector per free column of the RREF, with a 1 in that column.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def left_kernel_basis(M, nrows: int | None = None) -> list[list[Scalar]]:
    """Basis of {u : u^T M = 0}."""
    return kernel_basis(transpose(M), nrows if nrows is not None else len(M))


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def mat_vec(M, v) -> list[Scalar]:
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in M]


def mat_mul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), ZERO) for col in Bt] for row in A]


def dot(u, v) -> Scalar:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def solve(A, b):
    """Unique solution of the square system ``A x = b``, or ``None`` if singular."""
    n = len(A)
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, n + 1)
    if pivots != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def inverse(A):
    """Inverse of a square matrix, or ``None`` if singular."""
    n = len(A)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        return None
    return [row[n:] for row in R]


def det(A) -> Scalar:
    n = len(A)
    rows = [list(r) for r in A]
    result: Scalar = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            result = -result
        p = rows[c][c]
        result = result * p
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def split_rational(M) -> list[list[Fraction]]:
    """Replace each row by its rational-part row and its sqrt(d)-coefficient row.

    For integer vectors k, ``M k = 0`` iff both split rows annihilate k.
    """
    out = []
    for row in M:
        parts = [rational_parts(x) for x in row]
        out.append([p for p, _ in parts])
        if any(q != 0 for _, q in parts):
            out.append([q for _, q in parts])
    return out


def integer_kernel_rank(M, ncols: int | None = None) -> int:
    """Rank of the lattice {k in Z^cols : M k = 0}."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    S = split_rational(M)
    return ncols - (rank(S) if S else 0)


def primitive_integer(v) -> list[int]:
    """Smallest positive integer multiple of a rational vector with coprime entries."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return ints
    return [x // g for x in ints]


def smith_normal_form(A):
    """Smith normal form of an integer matrix.

    Returns ``(D, U, V)`` with ``U A V = D`` diagonal, each diagonal entry
    dividing the next, and ``U``, ``V`` unimodular.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_row(M, src, dst, f):  # row dst += f * row src
        M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]

    def add_col(M, src, dst, f):
        for row in M:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(D, t, i)
        swap_rows(U, t, i)
        swap_cols(D, t, j)
        swap_cols(V, t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    f = D[i][t] // D[t][t]
                    add_row(D, t, i, -f)
                    add_row(U, t, i, -f)
                    if D[i][t]:
                        swap_rows(D, t, i)
                        swap_rows(U, t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    f = D[t][j] // D[t][t]
                    add_col(D, t, j, -f)
                    add_col(V, t, j, -f)
                    if D[t][j]:
                        swap_cols(D, t, j)
                        swap_cols(V, t, j)
                        done = False
            if done:
                # enforce divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is not None:
                    add_row(D, bad[0], t, 1)
                    add_row(U, bad[0], t, 1)
                    done = False
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


def invariant_factors(A) -> list[int]:
    D, _, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]
