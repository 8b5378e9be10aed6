"""Complex subspaces h of C^m, leaves of the canonical foliation, and the
reduction of maximal torus actions to moment-angle data.

Leaf ranks.  For a face I, an element of Gamma_I has the form 2*pi*i*k + c
with k integral off I and c supported on I.  It lies in Ker q^C iff q(k) is
in the complex span of the a_i (i in I); q(k) is real and a real vector in
the complex span of real vectors lies in their real span.  Since the a_i for
i in I are independent, k determines c, so

    rank Gamma_I = rank {k in Z^([m] minus I) : q(k) in span_R(a_i : i in I)}.

The span condition is eliminated by applying the rows of a matrix whose
kernel is that span, and the remaining integral rank is computed after
splitting every entry into its rational and surd parts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cplx import ExactComplex
from .facering import build_presentation
from .fan import FanError, MarkedFan, projected_fan
from .scalar import scalar_to_json, to_scalar

log = logging.getLogger(__name__)

ZERO = Fraction(0)


class HSubspace:
    """A complex subspace of C^m given by a basis of exact complex vectors."""

    def __init__(self, m: int, basis):
        self.m = int(m)
        self.basis = [[ExactComplex.coerce(x) for x in v] for v in basis]
        for v in self.basis:
            if len(v) != self.m:
                raise ValueError(f"basis vector of length {len(v)} for m = {self.m}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def real_parts(self):
        return [[x.re for x in v] for v in self.basis]

    def imag_parts(self):
        return [[x.im for x in v] for v in self.basis]

    def real_span(self):
        """Spanning vectors of r = Re(h): Re u and Re(i u) = -Im u per basis vector."""
        out = []
        for v in self.basis:
            out.append([x.re for x in v])
            out.append([-x.im for x in v])
        return out

    def extended(self, new_m: int) -> "HSubspace":
        """Pad with zeros on the coordinates m+1..new_m."""
        zero = ExactComplex(0)
        return HSubspace(new_m, [v + [zero] * (new_m - self.m) for v in self.basis])

    def to_json(self) -> list:
        return [[x.to_json() for x in v] for v in self.basis]

    def __repr__(self):
        return f"HSubspace(m={self.m}, dim={self.dim})"


@dataclass
class HReport:
    dimension_ok: bool
    injective: bool
    q_vanishes: bool
    expected_dim: int
    real_rank: int
    witness: list = field(default_factory=list)   # nonzero images under q

    @property
    def ok(self) -> bool:
        return self.dimension_ok and self.injective and self.q_vanishes


def validate_h(fan: MarkedFan, h: HSubspace) -> HReport:
    """Check dim h = (m - n)/2, Re injective on h, and q^C zero on h."""
    m, n = fan.m, fan.n
    if h.m != m:
        raise ValueError(f"h lives in C^{h.m} but the fan has m = {m}")
    if (m - n) % 2:
        raise ValueError(f"m - n = {m - n} is odd; add a ghost vertex to even out dimensions")
    expected = (m - n) // 2
    stacked = h.real_span()
    r = linalg.rank(stacked) if stacked else 0
    q = fan.ray_matrix()
    witness = []
    for t, (re, im) in enumerate(zip(h.real_parts(), h.imag_parts()), 1):
        for part, vec in (("re", re), ("im", im)):
            img = linalg.mat_vec(q, vec)
            if any(x != 0 for x in img):
                witness.append({"vector": t, "part": part,
                                "image": [scalar_to_json(x) for x in img]})
    return HReport(h.dim == expected, r == 2 * h.dim, not witness, expected, r, witness)


@dataclass(frozen=True)
class LeafType:
    face: tuple
    gamma_rank: int
    free: int        # m - n - rank, the number of C factors

    @property
    def compact(self) -> bool:
        return self.free == 0

    @property
    def description(self) -> str:
        return f"(C^x)^{self.gamma_rank} x C^{self.free}"

    def to_json(self) -> dict:
        return {"face": list(self.face), "gamma_rank": self.gamma_rank,
                "type": self.description, "compact": self.compact}


def gamma_rank(fan: MarkedFan, face) -> int:
    face = tuple(sorted(face))
    n, m = fan.n, fan.m
    if face:
        span_rows = [list(fan.ray(i)) for i in face]
        P = linalg.kernel_basis(span_rows, n)   # rows u with u . a_i = 0 on the face
    else:
        P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    cols = [i for i in range(1, m + 1) if i not in face]
    q_rest = [[fan.ray(i)[c] for i in cols] for c in range(n)]
    M = linalg.mat_mul(P, q_rest) if P and cols else []
    if not cols:
        return 0
    return linalg.integer_kernel_rank(M, len(cols)) if M else len(cols)


def leaf_type(fan: MarkedFan, face) -> LeafType:
    face = tuple(sorted(int(i) for i in face))
    if not fan.complex.is_face(face):
        raise FanError(f"{list(face)} is not a face of the fan")
    r = gamma_rank(fan, face)
    top = fan.m - fan.n
    if not 0 <= r <= top:
        raise AssertionError(f"leaf rank {r} outside [0, {top}] for face {face}")
    return LeafType(face, r, top - r)


@dataclass
class LeafCensus:
    leaves: list
    generic_rank: int
    rational: bool
    all_compact: bool

    def to_json(self) -> dict:
        return {
            "leaves": {",".join(map(str, lt.face)) or "empty": lt.to_json() for lt in self.leaves},
            "generic_rank": self.generic_rank,
            "generic_leaf_compact": self.leaves[0].compact if self.leaves else True,
            "rational": self.rational,
            "all_compact": self.all_compact,
        }


def leaf_census(fan: MarkedFan) -> LeafCensus:
    faces = sorted(fan.complex.faces, key=lambda f: (len(f), sorted(f)))
    leaves = [leaf_type(fan, f) for f in faces]
    return LeafCensus(leaves, leaves[0].gamma_rank, fan.discriminant is None,
                      all(lt.compact for lt in leaves))


def maximal_action_reduce(fan: MarkedFan, r_basis, lattice=None):
    """Project a fan in g along r and present the ring of the image.

    ``lattice`` optionally gives an integer basis (rows) of the lattice in g;
    it is used to check that every cone is unimodular.  Without it the check
    is skipped with a warning.
    """
    if lattice is None:
        log.warning("no lattice given; nonsingularity of the fan in g is not checked")
    else:
        _check_nonsingular(fan, lattice)
    image = projected_fan(fan, r_basis)
    return image, build_presentation(image)


def _check_nonsingular(fan: MarkedFan, lattice):
    L = [[to_scalar(x) for x in row] for row in lattice]
    Lt = linalg.transpose(L)
    for f in fan.facets:
        coords = []
        for i in f:
            c = linalg.solve(Lt, list(fan.ray(i)))
            if c is None or any(not isinstance(x, Fraction) or x.denominator != 1 for x in c):
                raise FanError(f"ray a_{i} is not a lattice vector")
            coords.append([int(x) for x in c])
        if linalg.invariant_factors(coords) != [1] * len(f):
            raise FanError(f"cone {list(f)} is not unimodular in the given lattice")


def kernel_of_q(fan: MarkedFan):
    return linalg.kernel_basis(fan.ray_matrix(), fan.m)
