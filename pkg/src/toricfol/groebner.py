"""Polynomials in v_1..v_m over Q or Q(sqrt(d)) and Buchberger's algorithm.

A polynomial is a dict mapping exponent tuples to nonzero coefficients.
The monomial order is degree reverse lexicographic with the variables ranked
v_m > ... > v_1, so that v_1 plays the role of the last (cheapest) variable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .scalar import Scalar, format_scalar, to_scalar

Monomial = tuple
Poly = dict


def degrevlex_key(mono: Monomial):
    """Sort key: larger key means larger monomial."""
    return (sum(mono),) + tuple(-e for e in mono)


def monomial(m: int, *indices: int) -> Monomial:
    """Exponent tuple of v_{i1} * v_{i2} * ... (1-based, repeats allowed)."""
    e = [0] * m
    for i in indices:
        e[i - 1] += 1
    return tuple(e)


def var(m: int, i: int) -> Poly:
    return {monomial(m, i): Fraction(1)}


def const(m: int, c=1) -> Poly:
    c = to_scalar(c)
    return {(0,) * m: c} if c != 0 else {}


def linear_form(coeffs) -> Poly:
    m = len(coeffs)
    out = {}
    for i, c in enumerate(coeffs, 1):
        c = to_scalar(c)
        if c != 0:
            out[monomial(m, i)] = c
    return out


def add(p: Poly, q: Poly, scale: Scalar = Fraction(1)) -> Poly:
    """p + scale*q."""
    out = dict(p)
    for mono, c in q.items():
        v = out.get(mono, 0) + scale * c
        if v == 0:
            out.pop(mono, None)
        else:
            out[mono] = v
    return out


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, q, Fraction(-1))


def scale(p: Poly, c: Scalar) -> Poly:
    if c == 0:
        return {}
    return {mono: c * v for mono, v in p.items()}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            mono = mono_mul(ma, mb)
            v = out.get(mono, 0) + ca * cb
            if v == 0:
                out.pop(mono, None)
            else:
                out[mono] = v
    return out


def shift(p: Poly, mono: Monomial, c: Scalar) -> Poly:
    return {mono_mul(mono, k): c * v for k, v in p.items()}


def leading(p: Poly):
    mono = max(p, key=degrevlex_key)
    return mono, p[mono]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def is_homogeneous(p: Poly) -> bool:
    return len({sum(mono) for mono in p}) <= 1


def reduce(p: Poly, basis: list[Poly]) -> Poly:
    """Full reduction (normal form) of ``p`` by ``basis``."""
    leads = [leading(g) for g in basis]
    p = dict(p)
    rem: Poly = {}
    while p:
        mono, c = leading(p)
        for g, (lm, lc) in zip(basis, leads):
            if divides(lm, mono):
                p = add(p, shift(g, quotient(mono, lm), c / lc), Fraction(-1))
                break
        else:
            rem[mono] = c
            del p[mono]
    return rem


def _spoly(f: Poly, g: Poly) -> Poly:
    (mf, cf), (mg, cg) = leading(f), leading(g)
    L = lcm(mf, mg)
    return sub(shift(f, quotient(L, mf), 1 / cf), shift(g, quotient(L, mg), 1 / cg))


def buchberger(generators: list[Poly]) -> list[Poly]:
    """Reduced Groebner basis (monic, sorted by leading monomial, descending)."""
    G = [g for g in (dict(p) for p in generators) if g]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        mi, mj = leading(G[i])[0], leading(G[j])[0]
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue  # coprime leading terms: S-polynomial reduces to zero
        r = reduce(_spoly(G[i], G[j]), G)
        if r:
            G.append(r)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return _reduced(G)


def _reduced(G: list[Poly]) -> list[Poly]:
    # drop elements whose leading monomial is divisible by another's
    G = [g for g in G if g]
    keep = []
    for k, g in enumerate(G):
        lm = leading(g)[0]
        dominated = False
        for j, h in enumerate(G):
            if j == k:
                continue
            lh = leading(h)[0]
            if divides(lh, lm) and (lh != lm or j < k):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for k, g in enumerate(keep):
        # tail reduction; the leading term is irreducible by the others
        lm, lc = leading(g)
        r = add({lm: lc}, reduce({mono: c for mono, c in g.items() if mono != lm},
                                 keep[:k] + keep[k + 1:]))
        out.append(scale(r, 1 / lc))
    out.sort(key=lambda g: degrevlex_key(leading(g)[0]), reverse=True)
    return out


def monomials_of_degree(m: int, d: int):
    """All exponent tuples in m variables of total degree d, descending in the order."""
    out = []
    for combo in combinations_with_replacement(range(1, m + 1), d):
        out.append(monomial(m, *combo))
    out.sort(key=degrevlex_key, reverse=True)
    return out


def standard_monomials(basis: list[Poly], m: int, degree: int) -> list[Monomial]:
    """Monomials of the given degree not divisible by any leading monomial, ascending."""
    leads = [leading(g)[0] for g in basis]
    out = [mono for mono in monomials_of_degree(m, degree)
           if not any(divides(lm, mono) for lm in leads)]
    out.sort(key=degrevlex_key)
    return out


def format_monomial(mono: Monomial, name: str = "v") -> str:
    parts = []
    for i, e in enumerate(mono, 1):
        if e == 1:
            parts.append(f"{name}{i}")
        elif e > 1:
            parts.append(f"{name}{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Poly, name: str = "v") -> str:
    """Human-readable rendering, terms in descending monomial order."""
    if not p:
        return "0"
    out = []
    for mono in sorted(p, key=degrevlex_key, reverse=True):
        c = p[mono]
        m = format_monomial(mono, name)
        neg = c < 0
        text = format_scalar(-c if neg else c)
        if m == "1":
            term = text
        elif text == "1":
            term = m
        elif "+" in text or "-" in text:
            term = f"({text})*{m}"
        else:
            term = f"{text}*{m}"
        if not out:
            out.append(("-" if neg else "") + term)
        else:
            out.append(("- " if neg else "+ ") + term)
    return " ".join(out)
