"""The bigraded model H (x) Lambda(W^{1,0} + W^{0,1}) and its cohomology.

Exterior generators are numbered 0..2s-1: w'_1..w'_s first, then
w''_1..w''_s.  A basis word is a strictly increasing tuple of generator
numbers.  The differential kills the ring and every w'', sends w'_t to the
degree-one class delta_t, and passes generators with the Koszul sign:

    d(w_{j_0} w_{j_1} ... w_{j_k}) = sum_pos (-1)^pos d(w_{j_pos}) w_{S minus j_pos}

Example with s = 1: d(w'_1 w''_1) = delta_1 w''_1, while
d(w''_1 w'_1) is not a basis word and is never formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import groebner as gb
from . import linalg
from .facering import QuotientBasis

ZERO = Fraction(0)


@dataclass
class DGAModel:
    ring: QuotientBasis
    s: int
    deltas: list                  # normal forms of the delta_t, degree one
    basis: list = field(default_factory=list)        # (ring degree, monomial, word)
    bidegrees: dict = field(default_factory=dict)    # (p, q) -> list of basis positions

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def bidegree(self, k: int):
        deg, _, word = self.basis[k]
        a = sum(1 for j in word if j < self.s)
        return deg + a, deg + len(word) - a

    def differential(self, k: int) -> dict:
        """d of the k-th basis element as {basis position: coefficient}."""
        deg, mono, word = self.basis[k]
        out: dict[int, object] = {}
        for pos, j in enumerate(word):
            if j >= self.s:
                continue
            delta = self.deltas[j]
            if not delta:
                continue
            rest = word[:pos] + word[pos + 1:]
            prod = self.ring.multiply({mono: Fraction(1)}, delta)
            sign = -1 if pos % 2 else 1
            for m2, c in prod.items():
                tgt = self._index[(sum(m2), m2, rest)]
                v = out.get(tgt, ZERO) + sign * c
                if v == 0:
                    out.pop(tgt, None)
                else:
                    out[tgt] = v
        return out

    def matrix(self, p: int, q: int):
        """Matrix of d: C^{p,q} -> C^{p,q+1} (rows index the target)."""
        src = self.bidegrees.get((p, q), [])
        tgt = self.bidegrees.get((p, q + 1), [])
        row_of = {k: r for r, k in enumerate(tgt)}
        M = [[ZERO] * len(src) for _ in tgt]
        for c, k in enumerate(src):
            for t, v in self.differential(k).items():
                M[row_of[t]][c] = v
        return M

    def check_d_squared(self) -> bool:
        for (p, q) in self.bidegrees:
            A = self.matrix(p, q)
            B = self.matrix(p, q + 1)
            if not A or not B or not A[0]:
                continue
            if any(x != 0 for row in linalg.mat_mul(B, A) for x in row):
                return False
        return True


def _as_delta(ring: QuotientBasis, delta) -> dict:
    m = ring.m
    if isinstance(delta, dict):
        p = delta
    else:
        if len(delta) != m:
            raise ValueError(f"delta given with {len(delta)} coefficients, need {m}")
        p = gb.linear_form(delta)
    if any(sum(mono) != 1 for mono in p):
        raise ValueError(f"delta {gb.format_poly(p)} is not a degree-one class")
    return ring.normal_form(p)


def build_model(ring: QuotientBasis, deltas) -> DGAModel:
    """Materialize the bigraded basis; ``deltas`` are linear forms in v (dicts or
    coefficient vectors of length m) and are reduced to normal form."""
    pres = ring.presentation
    s = len(deltas)
    if (pres.m - pres.n) % 2 == 0 and s != (pres.m - pres.n) // 2:
        raise ValueError(f"{s} deltas given, the model needs s = {(pres.m - pres.n) // 2}")
    if (pres.m - pres.n) % 2:
        raise ValueError("m - n is odd; no complex structure without a ghost vertex")
    ds = [_as_delta(ring, d) for d in deltas]
    model = DGAModel(ring, s, ds)
    words = [w for k in range(2 * s + 1) for w in combinations(range(2 * s), k)]
    for deg, monos in enumerate(ring.monomials):
        for mono in monos:
            for w in words:
                model.basis.append((deg, mono, w))
    model._index = {b: k for k, b in enumerate(model.basis)}
    for k in range(len(model.basis)):
        model.bidegrees.setdefault(model.bidegree(k), []).append(k)
    return model


@dataclass
class DolbeaultTable:
    size: int
    h: dict          # (p, q) -> dimension, zero entries omitted

    def get(self, p: int, q: int) -> int:
        return self.h.get((p, q), 0)

    def nonzero(self) -> list:
        return sorted(k for k, v in self.h.items() if v)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (p + q) * v for (p, q), v in self.h.items())

    def total(self) -> int:
        return sum(self.h.values())

    def rows(self) -> list:
        return [[self.get(p, q) for q in range(self.size + 1)] for p in range(self.size + 1)]

    def to_json(self) -> dict:
        return {"size": self.size, "h": self.rows(),
                "nonzero": [[p, q, self.h[(p, q)]] for p, q in self.nonzero()]}


def model_cohomology(model: DGAModel) -> DolbeaultTable:
    ranks = {}
    for (p, q) in model.bidegrees:
        M = model.matrix(p, q)
        ranks[(p, q)] = linalg.rank(M) if M and M[0] else 0
    h = {}
    for (p, q), ks in model.bidegrees.items():
        v = len(ks) - ranks[(p, q)] - ranks.get((p, q - 1), 0)
        if v:
            h[(p, q)] = v
    return DolbeaultTable(model.ring.presentation.n + model.s, h)


@dataclass
class FrolicherReport:
    euler: int
    h00: int
    ok: bool


def frolicher_check(table: DolbeaultTable, s: int) -> FrolicherReport:
    chi = table.euler_characteristic()
    h00 = table.get(0, 0)
    ok = h00 == 1 and (s == 0 or chi == 0)
    return FrolicherReport(chi, h00, ok)
