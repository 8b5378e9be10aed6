"""The ring C[v_1..v_m]/(I_K + J) of a complete simplicial fan.

I_K is the Stanley-Reisner ideal (products over minimal non-faces) and J is
generated by the linear forms sum_i <u, a_i> v_i for u running over the dual
standard basis.  Every v_i has bidegree (1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import groebner as gb
from . import linalg
from .fan import FanError, MarkedFan, simpliciality_witness, validate_fan
from .scalar import scalar_to_json

ZERO = Fraction(0)


@dataclass
class RingPresentation:
    m: int
    n: int
    sr_generators: list            # minimal non-faces, sorted tuples
    linear_forms: list             # n coefficient rows of length m
    discriminant: int | None = None

    def sr_polys(self) -> list[dict]:
        return [{gb.monomial(self.m, *f): Fraction(1)} for f in self.sr_generators]

    def linear_polys(self) -> list[dict]:
        return [gb.linear_form(row) for row in self.linear_forms]

    def generators(self) -> list[dict]:
        return self.sr_polys() + [p for p in self.linear_polys() if p]

    def to_json(self) -> dict:
        return {
            "generators": [f"v{i}" for i in range(1, self.m + 1)],
            "bidegree": [1, 1],
            "stanley_reisner": [gb.format_poly(p) for p in self.sr_polys()],
            "linear": [gb.format_poly(p) for p in self.linear_polys()],
            "discriminant": self.discriminant,
        }


def lsop_check(fan: MarkedFan):
    """``(True, None)`` if every face has independent markings, else ``(False, face)``."""
    wit = simpliciality_witness(fan)
    return wit is None, wit


def build_presentation(fan: MarkedFan, require_complete: bool = True) -> RingPresentation:
    if require_complete:
        rep = validate_fan(fan)
        if not rep.complete:
            raise FanError(f"ring presentation needs a complete simplicial fan: "
                           f"{rep.simplicial_witness or rep.fan_witness or rep.complete_witness}")
    forms = [[fan.ray(i)[j] for i in range(1, fan.m + 1)] for j in range(fan.n)]
    return RingPresentation(fan.m, fan.n, fan.complex.minimal_non_faces(), forms,
                            fan.discriminant)


@dataclass
class QuotientBasis:
    presentation: RingPresentation
    groebner_basis: list
    monomials: list = field(default_factory=list)  # per degree, ascending order

    @property
    def m(self) -> int:
        return self.presentation.m

    @property
    def dims(self) -> tuple:
        return tuple(len(b) for b in self.monomials)

    @property
    def top_degree(self) -> int:
        return len(self.monomials) - 1

    def normal_form(self, p: dict) -> dict:
        return gb.reduce(p, self.groebner_basis)

    def multiply(self, x: dict, y: dict) -> dict:
        return self.normal_form(gb.mul(x, y))

    def basis_polys(self, degree: int) -> list[dict]:
        return [{mono: Fraction(1)} for mono in self.monomials[degree]]

    def coordinates(self, p: dict, degree: int) -> list:
        """Coefficients of the normal form of a degree-homogeneous ``p`` in the basis."""
        r = self.normal_form(p)
        basis = self.monomials[degree] if 0 <= degree < len(self.monomials) else []
        index = {mono: k for k, mono in enumerate(basis)}
        out = [ZERO] * len(basis)
        for mono, c in r.items():
            if mono not in index:
                raise ValueError(f"{gb.format_poly(p)} is not homogeneous of degree {degree}")
            out[index[mono]] = c
        return out

    def to_json(self) -> dict:
        return {
            "groebner_basis": [gb.format_poly(g) for g in self.groebner_basis],
            "dims": list(self.dims),
            "basis": [[gb.format_monomial(mono) for mono in b] for b in self.monomials],
        }


def quotient_basis(p: RingPresentation, max_degree: int | None = None) -> QuotientBasis:
    """Groebner basis and standard monomials in degrees 0..n.

    The quotient of a face ring by a linear system of parameters vanishes
    above degree n; degree n + 1 is computed as a check.
    """
    G = gb.buchberger(p.generators())
    top = p.n if max_degree is None else max_degree
    monos = [gb.standard_monomials(G, p.m, d) for d in range(top + 1)]
    if max_degree is None and gb.standard_monomials(G, p.m, top + 1):
        raise FanError("quotient does not vanish above degree n; the linear forms are not an lsop")
    while len(monos) > 1 and not monos[-1]:
        monos.pop()
    return QuotientBasis(p, G, monos)


def poincare_pairing(qb: QuotientBasis, i: int):
    """Matrix of (x, y) -> top coefficient of xy for degree-i x and degree-(n-i) y.

    Returns ``(matrix, nondegenerate)``.
    """
    n = qb.presentation.n
    if qb.top_degree != n or len(qb.monomials[n]) != 1:
        raise FanError("the top-degree part is not one-dimensional; is the fan complete?")
    if not 0 <= i <= n:
        raise ValueError(f"degree {i} outside 0..{n}")
    top = qb.monomials[n][0]
    X, Y = qb.basis_polys(i), qb.basis_polys(n - i)
    M = [[qb.multiply(x, y).get(top, ZERO) for y in Y] for x in X]
    nondeg = len(X) == len(Y) and (not X or linalg.rank(M) == len(X))
    return M, nondeg


@dataclass
class HodgeDiamond:
    n: int
    table: list            # table[p][q]
    betti: list            # total degrees 0..2n

    def to_json(self) -> dict:
        return {"n": self.n, "h": self.table, "betti": self.betti}


def hodge_diamond(fan: MarkedFan, qb: QuotientBasis | None = None) -> HodgeDiamond:
    if qb is None:
        qb = quotient_basis(build_presentation(fan))
    n = fan.n
    dims = list(qb.dims) + [0] * (n + 1 - len(qb.dims))
    table = [[dims[p] if p == q else 0 for q in range(n + 1)] for p in range(n + 1)]
    betti = [sum(table[p][r - p] for p in range(n + 1) if 0 <= r - p <= n)
             for r in range(2 * n + 1)]
    return HodgeDiamond(n, table, betti)


def ring_report(fan: MarkedFan) -> dict:
    pres = build_presentation(fan)
    qb = quotient_basis(pres)
    diamond = hodge_diamond(fan, qb)
    out = pres.to_json()
    out.update(qb.to_json())
    out["hodge"] = diamond.to_json()
    pair = []
    for i in range(fan.n + 1):
        M, ok = poincare_pairing(qb, i)
        pair.append({"degree": i, "matrix": [[scalar_to_json(x) for x in r] for r in M],
                     "nondegenerate": ok})
    out["poincare_pairing"] = pair
    return out
