"""Marked simplicial fans {K; a_1, ..., a_m}.

Support functions follow the concave convention: a height vector ``h``
certifies polytopality when, across every wall between facets ``s`` and
``s'``, the linear extension of ``h`` from ``s`` evaluated at the ray of
``s'`` opposite the wall exceeds the assigned height there.  The polytope is
then ``{x : <x, a_i> >= h_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .complexes import SimplicialComplex
from .lp import EQ, LE, lp_solve
from .scalar import Scalar, common_discriminant, scalar_sign, to_scalar

ZERO = Fraction(0)


class FanError(ValueError):
    pass


class MarkedFan:
    """A simplicial complex together with one marking vector per index.

    Ghost vertices carry a vector too (zero by default); it is ignored by
    all geometric checks but still enters the map q: e_i -> a_i.
    """

    def __init__(self, complex: SimplicialComplex, rays, n: int | None = None):
        rays = [tuple(to_scalar(x) for x in r) for r in rays]
        if len(rays) != complex.m:
            raise FanError(f"{len(rays)} ray vectors given for m = {complex.m}")
        if n is None:
            if not rays:
                raise FanError("ambient dimension cannot be inferred from zero rays")
            n = len(rays[0])
        for i, r in enumerate(rays, 1):
            if len(r) != n:
                raise FanError(f"ray a_{i} has length {len(r)}, expected {n}")
        self.complex = complex
        self.n = int(n)
        self.rays = tuple(rays)
        self.discriminant = common_discriminant(x for r in rays for x in r)
        self._inverses: dict = {}      # sorted facet -> inverse of its cone matrix

    @classmethod
    def from_faces(cls, rays, max_faces, ghosts=None, n=None) -> "MarkedFan":
        rays = list(rays)
        return cls(SimplicialComplex(len(rays), max_faces, ghosts), rays, n)

    @property
    def m(self) -> int:
        return self.complex.m

    def ray(self, i: int) -> tuple:
        return self.rays[i - 1]

    def __eq__(self, other):
        return (isinstance(other, MarkedFan) and self.n == other.n
                and self.complex == other.complex and self.rays == other.rays)

    def __hash__(self):
        return hash((self.n, self.complex, self.rays))

    def __repr__(self):
        return f"MarkedFan(n={self.n}, m={self.m}, facets={len(self.complex.facets)})"

    def ray_matrix(self) -> list[list[Scalar]]:
        """The n x m matrix of q: R^m -> R^n, e_i -> a_i."""
        return [[r[j] for r in self.rays] for j in range(self.n)]

    def cone_matrix(self, face) -> list[list[Scalar]]:
        """Columns a_i for i in ``face`` (sorted), as an n x k matrix."""
        idx = sorted(face)
        return [[self.rays[i - 1][j] for i in idx] for j in range(self.n)]

    @cached_property
    def report(self) -> "FanReport":
        """Cached :func:`validate_fan` result."""
        return validate_fan(self)

    @cached_property
    def facets(self) -> list[tuple[int, ...]]:
        return self.complex.sorted_facets()

    def _facet_inverse(self, face):
        if face in self._inverses:
            return self._inverses[face]
        if len(face) != self.n or frozenset(face) not in self.complex.facets:
            return None
        inv = linalg.inverse(self.cone_matrix(face))
        self._inverses[face] = inv
        return inv

    def inherit_inverses(self, parent: "MarkedFan") -> None:
        """Reuse cached facet inverses of ``parent`` for facets with unchanged markings."""
        for f, inv in parent._inverses.items():
            if frozenset(f) in self.complex.facets and all(
                    self.rays[i - 1] == parent.rays[i - 1] for i in f):
                self._inverses[f] = inv

    def coordinates(self, face, x):
        """Coefficients of ``x`` in the markings of ``face`` (sorted), or ``None``."""
        face = tuple(sorted(face))
        inv = self._facet_inverse(face)
        if inv is not None:
            return linalg.mat_vec(inv, x)
        A = self.cone_matrix(face)
        k = len(face)
        aug = [row + [xi] for row, xi in zip(A, x)]
        R, piv = linalg.rref(aug, k + 1)
        if piv != list(range(k)):
            return None
        return [R[i][k] for i in range(k)]

    def relabeled(self, perm: dict[int, int]) -> "MarkedFan":
        """Move index i to perm[i]."""
        rays = [None] * self.m
        for i in range(1, self.m + 1):
            rays[perm[i] - 1] = self.rays[i - 1]
        return MarkedFan(self.complex.relabel(perm), rays, self.n)

    def transformed(self, T) -> "MarkedFan":
        """Apply the linear map with matrix ``T`` to every marking."""
        return MarkedFan(self.complex, [linalg.mat_vec(T, r) for r in self.rays], self.n)

    def rescaled(self, factors) -> "MarkedFan":
        """Replace a_i by factors[i-1] * a_i."""
        return MarkedFan(self.complex,
                         [[to_scalar(c) * x for x in r] for c, r in zip(factors, self.rays)],
                         self.n)


def coordinate_fan(K: SimplicialComplex) -> MarkedFan:
    """The fan {R_>=<e_i : i in I> : I in K} in R^m."""
    m = K.m
    rays = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    return MarkedFan(K, rays, m)


# ---------------------------------------------------------------------------
# validation

@dataclass
class FanReport:
    simplicial: bool
    fan_condition: bool
    complete: bool
    simplicial_witness: tuple | None = None
    fan_witness: tuple | None = None
    complete_witness: list = field(default_factory=list)
    method: str = ""

    @property
    def ok(self) -> bool:
        return self.simplicial and self.fan_condition and self.complete


def simpliciality_witness(fan: MarkedFan):
    """Smallest face whose markings are linearly dependent, or ``None``."""
    faces = sorted(fan.complex.faces, key=lambda f: (len(f), sorted(f)))
    for f in faces:
        if not f:
            continue
        if linalg.rank(fan.cone_matrix(f)) < len(f):
            return tuple(sorted(f))
    return None


def _ridge_normal(fan: MarkedFan, ridge):
    if not ridge:
        return [Fraction(1)] + [ZERO] * (fan.n - 1) if fan.n == 1 else None
    rows = [list(fan.ray(i)) for i in sorted(ridge)]
    ker = linalg.kernel_basis(rows, fan.n)
    return ker[0] if len(ker) == 1 else None


def _separated_across_ridge(fan, ridge, j, k) -> bool:
    u = _ridge_normal(fan, ridge)
    if u is None:
        return False
    sj = scalar_sign(linalg.dot(u, fan.ray(j)))
    sk = scalar_sign(linalg.dot(u, fan.ray(k)))
    return sj * sk < 0


def cones_meet_properly(fan: MarkedFan, s1, s2) -> bool:
    """True iff cone(s1) and cone(s2) intersect exactly in cone(s1 & s2).

    Decided by the LP: find lambda, mu >= 0 with sum lambda a = sum mu a and
    the lambda-mass outside the common face equal to one.
    """
    s1, s2 = tuple(sorted(s1)), tuple(sorted(s2))
    common = set(s1) & set(s2)
    if set(s1) <= set(s2) or set(s2) <= set(s1):
        return True
    nv = len(s1) + len(s2)
    cons = []
    for row in range(fan.n):
        vec = [fan.ray(i)[row] for i in s1] + [-fan.ray(i)[row] for i in s2]
        cons.append((vec, EQ, ZERO))
    mass = [Fraction(int(i not in common)) for i in s1] + [ZERO] * len(s2)
    cons.append((mass, EQ, Fraction(1)))
    res = lp_solve([ZERO] * nv, cons, nonneg=range(nv))
    return not res.feasible


def validate_fan(fan: MarkedFan, pairwise: bool | None = None) -> FanReport:
    """Check simpliciality, the fan condition and completeness.

    For pure pseudomanifolds of dimension n-1 the fan condition is decided by
    the local test across every ridge plus a one-point multiplicity count
    (a locally injective cover of the sphere of degree one).  Otherwise, or
    when ``pairwise`` is true, every pair of facets is tested by LP.
    """
    K = fan.complex
    wit = simpliciality_witness(fan)
    if wit is not None:
        return FanReport(False, False, False, simplicial_witness=wit,
                         complete_witness=["not simplicial"], method="rank")
    facets = fan.facets
    pure_full = K.is_pure and len(facets[0]) == fan.n and fan.n >= 1
    ridges = K.ridges() if K.is_pure else {}
    bad_ridges = [tuple(sorted(r)) for r, fs in ridges.items() if len(fs) != 2]
    bad_ridges.sort()
    pseudo = pure_full and not bad_ridges

    fan_ok, fan_wit = True, None
    if pseudo and not pairwise:
        method = "cover"
        for r, (f1, f2) in sorted(ridges.items(), key=lambda kv: sorted(kv[0])):
            (j,) = f1 - r
            (k,) = f2 - r
            if not _separated_across_ridge(fan, r, j, k):
                fan_ok, fan_wit = False, (tuple(sorted(f1)), tuple(sorted(f2)))
                break
        if fan_ok:
            s0 = facets[0]
            p = [sum((fan.ray(i)[c] for i in s0), ZERO) for c in range(fan.n)]
            hits = [f for f in facets if _in_closed_cone(fan, f, p)]
            if len(hits) != 1:
                fan_ok = False
                fan_wit = tuple(hits[:2])
    else:
        method = "pairwise"
        adj = {}
        for r, fs in ridges.items():
            for a in fs:
                for b in fs:
                    if a != b:
                        adj[(a, b)] = r
        fs = [frozenset(f) for f in facets]
        for x in range(len(fs)):
            for y in range(x + 1, len(fs)):
                a, b = fs[x], fs[y]
                r = adj.get((a, b))
                if r is not None and len(fs) and len(a) == len(b) == fan.n:
                    (j,) = a - r
                    (k,) = b - r
                    ok = _separated_across_ridge(fan, r, j, k)
                else:
                    ok = cones_meet_properly(fan, a, b)
                if not ok:
                    fan_ok, fan_wit = False, (tuple(sorted(a)), tuple(sorted(b)))
                    break
            if not fan_ok:
                break

    complete_wit: list = []
    if not K.is_pure:
        complete_wit = ["not pure"]
    elif not pure_full:
        complete_wit = [f"facets have {len(facets[0])} vertices, need {fan.n}"]
    else:
        complete_wit = bad_ridges
    complete = not complete_wit and fan_ok
    if not complete and not complete_wit:
        complete_wit = ["fan condition fails"]
    return FanReport(True, fan_ok, complete, None, fan_wit, complete_wit, method)


def _in_closed_cone(fan, face, x) -> bool:
    c = fan.coordinates(face, x)
    return c is not None and all(v >= 0 for v in c)


def locate_cone(fan: MarkedFan, x):
    """Smallest face I with x in cone(I), or ``None`` when x lies outside the fan."""
    x = [to_scalar(v) for v in x]
    if all(v == 0 for v in x):
        return ()
    for f in fan.facets:
        c = fan.coordinates(f, x)
        if c is not None and all(v >= 0 for v in c):
            return tuple(i for i, v in zip(f, c) if v > 0)
    return None


# ---------------------------------------------------------------------------
# polytopality

@dataclass(frozen=True)
class Wall:
    """An interior wall: ``ridge`` shared by ``facet`` and ``other``.

    ``form`` maps ray index -> coefficient of the margin
    ``L_facet(a_k) - h_k`` as a linear form in the heights.
    """

    ridge: tuple
    facet: tuple
    other: tuple
    form: tuple  # ((index, coeff), ...)

    def margin(self, heights) -> Scalar:
        return sum((c * heights[i - 1] for i, c in self.form), ZERO)


def walls(fan: MarkedFan) -> list[Wall]:
    out = []
    for r, fs in sorted(fan.complex.ridges().items(), key=lambda kv: sorted(kv[0])):
        if len(fs) != 2:
            continue
        f1, f2 = sorted(fs, key=sorted)
        (k,) = f2 - r
        coeffs = fan.coordinates(f1, fan.ray(k))
        form = {i: c for i, c in zip(sorted(f1), coeffs) if c != 0}
        form[k] = form.get(k, ZERO) - 1
        out.append(Wall(tuple(sorted(r)), tuple(sorted(f1)), tuple(sorted(f2)),
                        tuple(sorted(form.items()))))
    return out


@dataclass
class PolytopalityCertificate:
    polytopal: bool
    heights: tuple | None = None
    slack: Scalar | None = None
    refutation: dict | None = None   # ridge -> nonnegative multiplier
    walls: list = field(default_factory=list, repr=False)

    def verify(self) -> bool:
        """Exact re-evaluation of the certificate against its walls."""
        if self.polytopal:
            if self.slack is None or not self.slack > 0:
                return False
            if any(abs(h) > 1 for h in self.heights):
                return False
            return all(w.margin(self.heights) >= self.slack for w in self.walls)
        if not self.refutation:
            return False
        if any(y < 0 for y in self.refutation.values()):
            return False
        if not any(y > 0 for y in self.refutation.values()):
            return False
        total: dict[int, Scalar] = {}
        for w in self.walls:
            y = self.refutation.get(w.ridge, ZERO)
            if y == 0:
                continue
            for i, c in w.form:
                total[i] = total.get(i, ZERO) + y * c
        return all(v == 0 for v in total.values())


def is_polytopal(fan: MarkedFan, require_complete: bool = True,
                 method: str = "gordan", hint=None) -> PolytopalityCertificate:
    """Decide polytopality of a complete simplicial fan by exact LP.

    ``hint`` is an optional list of candidate heights.  If they are strictly
    concave across every wall they are returned as the certificate and no LP
    is solved; otherwise the LP decides as usual.

    ``method="slack"`` maximizes the common wall margin t over heights in
    [-1, 1]^m; the fan is polytopal iff the optimum is positive.

    ``method="gordan"`` (default) solves the alternative system instead:
    y >= 0 on walls, sum y = 1, sum_w y_w form_w = 0.  It has only m + 1 rows.
    A solution refutes polytopality; infeasibility comes with Farkas
    multipliers that are heights with every margin positive, which are then
    scaled into the box.  Both decide the same question.
    """
    if require_complete:
        rep = validate_fan(fan)
        if not rep.complete:
            raise FanError(f"polytopality needs a complete fan: {rep.complete_witness}")
    ws = walls(fan)
    if not ws:
        return PolytopalityCertificate(True, tuple([ZERO] * fan.m), Fraction(1), walls=ws)
    if hint is not None:
        cert = _wrap_heights(ws, hint)
        if cert.polytopal:
            return cert
    if method == "slack":
        return _slack_lp(ws, fan.m)
    if method != "gordan":
        raise ValueError(f"unknown method {method!r}")
    res, rows = _gordan_lp(ws, fan.m)
    if res.feasible:
        ref = {w.ridge: y for w, y in zip(ws, res.point) if y != 0}
        return PolytopalityCertificate(False, refutation=ref, walls=ws)
    y = res.farkas
    heights = [ZERO] * fan.m
    for i, yi in zip(rows, y):
        heights[i - 1] = yi
    scale_by = max(abs(h) for h in heights)
    if scale_by == 0:  # pragma: no cover - the margins are -y_0 > 0
        raise RuntimeError("degenerate Farkas heights")
    heights = tuple(h / scale_by for h in heights)
    slack = min(w.margin(heights) for w in ws)
    return PolytopalityCertificate(True, heights, slack, walls=ws)


def _slack_lp(ws, m) -> PolytopalityCertificate:
    used = sorted({i for w in ws for i, _ in w.form})
    cons = []
    for w in ws:
        vec = [ZERO] * (m + 1)
        for i, c in w.form:
            vec[i - 1] = -c
        vec[m] = Fraction(1)
        cons.append((vec, LE, ZERO))
    for i in used:
        e = [ZERO] * (m + 1)
        e[i - 1] = Fraction(1)
        cons.append((e, LE, Fraction(1)))
        cons.append(([-x for x in e], LE, Fraction(1)))
    obj = [ZERO] * m + [Fraction(1)]
    res = lp_solve(obj, cons)
    t = res.optimum
    if t > 0:
        return PolytopalityCertificate(True, tuple(res.point[:m]), t, walls=ws)
    res, _ = _gordan_lp(ws, m)
    ref = {w.ridge: y for w, y in zip(ws, res.point) if y != 0}
    return PolytopalityCertificate(False, refutation=ref, walls=ws)


def _gordan_lp(ws, m):
    """y >= 0, sum y = 1, sum_w y_w form_w = 0; the last row is the normalization.

    Returns the LP result and the ray index of each coefficient row.
    """
    nw = len(ws)
    cols: dict[int, list] = {}
    for k, w in enumerate(ws):
        for i, c in w.form:
            cols.setdefault(i, [ZERO] * nw)[k] = c
    rows = sorted(cols)
    cons = [(cols[i], EQ, ZERO) for i in rows]
    cons.append(([Fraction(1)] * nw, EQ, Fraction(1)))
    return lp_solve([ZERO] * nw, cons, nonneg=range(nw)), rows


def certificate_for_heights(fan: MarkedFan, heights) -> PolytopalityCertificate:
    """Wrap given heights as a certificate with the smallest wall margin as slack.

    Heights are scaled into [-1, 1] first, as in LP certificates.
    """
    return _wrap_heights(walls(fan), heights)


def _wrap_heights(ws, heights) -> PolytopalityCertificate:
    heights = [to_scalar(h) for h in heights]
    top = max((abs(h) for h in heights), default=ZERO)
    if top > 0:
        heights = [h / top for h in heights]
    heights = tuple(heights)
    slack = min((w.margin(heights) for w in ws), default=Fraction(1))
    return PolytopalityCertificate(slack > 0, heights, slack, walls=ws)


# ---------------------------------------------------------------------------
# projection

def projected_fan(fan: MarkedFan, r_basis) -> MarkedFan:
    """Image of ``fan`` under the quotient map g -> g/r.

    Coordinates on g/r come from a basis of the annihilator of r.
    """
    r_basis = [[to_scalar(x) for x in v] for v in r_basis]
    if r_basis and linalg.rank(r_basis) != len(r_basis):
        raise FanError("the subspace basis is linearly dependent")
    U = linalg.kernel_basis(r_basis, fan.n) if r_basis else [
        [Fraction(int(i == j)) for j in range(fan.n)] for i in range(fan.n)]
    rays = [linalg.mat_vec(U, r) for r in fan.rays]
    image = MarkedFan(fan.complex, rays, len(U))
    for f in fan.complex.faces:
        if f and linalg.rank(image.cone_matrix(f)) < len(f):
            raise FanError(f"cone {sorted(f)} collapses under the projection")
    rep = validate_fan(image)
    if not rep.complete:
        raise FanError(f"projected fan is not complete: {rep.complete_witness}")
    return image
