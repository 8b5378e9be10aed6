"""Abstract simplicial complexes on [m] = {1, ..., m} with ghost vertices."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb


class SimplicialComplex:
    """A simplicial complex given by its maximal faces.

    Vertices are 1-based.  Indices of ``[m]`` that are not vertices are ghost
    vertices; they may be listed explicitly and are then checked.
    """

    def __init__(self, m: int, max_faces, ghosts=None):
        facets = {frozenset(int(i) for i in f) for f in max_faces}
        for f in facets:
            bad = [i for i in f if not 1 <= i <= m]
            if bad:
                raise ValueError(f"face {sorted(f)} has indices outside [1, {m}]")
        # keep inclusion-maximal sets only
        sizes = {len(f) for f in facets}
        if len(sizes) > 1:
            top = max(sizes)
            bigger = [g for g in facets if len(g) > min(sizes)]
            facets = {f for f in facets
                      if len(f) == top or not any(f < g for g in bigger)}
        if not facets:
            facets = {frozenset()}
        self.m = int(m)
        self.facets = frozenset(facets)
        used = set().union(*self.facets)
        implied = frozenset(i for i in range(1, m + 1) if i not in used)
        if ghosts is not None and frozenset(ghosts) != implied:
            raise ValueError(
                f"ghost list {sorted(ghosts)} does not match the non-vertices {sorted(implied)}")
        self.ghosts = implied

    # basic structure ------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.m == other.m
                and self.facets == other.facets)

    def __hash__(self):
        return hash((self.m, self.facets))

    def __repr__(self):
        fs = sorted(sorted(f) for f in self.facets)
        return f"SimplicialComplex(m={self.m}, max_faces={fs}, ghosts={sorted(self.ghosts)})"

    @property
    def vertices(self) -> list[int]:
        return [i for i in range(1, self.m + 1) if i not in self.ghosts]

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                out.update(frozenset(c) for c in combinations(fl, k))
        return frozenset(out)

    def is_face(self, face) -> bool:
        return frozenset(face) in self.faces

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def faces_of_size(self, k: int) -> list[frozenset]:
        return sorted((f for f in self.faces if len(f) == k), key=sorted)

    def ridges(self) -> dict[frozenset, list[frozenset]]:
        """Codimension-one faces of a pure complex, mapped to the facets containing them."""
        out: dict[frozenset, list[frozenset]] = {}
        for f in sorted(self.facets, key=sorted):
            for i in sorted(f):
                out.setdefault(f - {i}, []).append(f)
        return out

    # combinatorics --------------------------------------------------------
    def minimal_non_faces(self) -> list[tuple[int, ...]]:
        """Inclusion-minimal subsets of [m] that are not faces, sorted."""
        faces = self.faces
        out = {frozenset([g]) for g in self.ghosts}
        verts = self.vertices
        for f in faces:
            for v in verts:
                if v in f:
                    continue
                s = f | {v}
                if s in faces or s in out:
                    continue
                if all((s - {u}) in faces for u in s):
                    out.add(s)
        return sorted((tuple(sorted(s)) for s in out), key=lambda t: (len(t), t))

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{d}) with f_{-1} = 1 for the empty face."""
        d = self.dim
        counts = [0] * (d + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def h_vector(self) -> tuple[int, ...]:
        if not self.is_pure:
            raise ValueError("h-vector requested for a non-pure complex")
        f = self.f_vector()
        n = len(f) - 1
        return tuple(
            sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
            for k in range(n + 1))

    # operations -----------------------------------------------------------
    def stellar_subdivision(self, face) -> "SimplicialComplex":
        """Stellar subdivision at ``face``; the new vertex is ``m + 1``."""
        face = frozenset(face)
        if len(face) < 2:
            raise ValueError("stellar subdivision needs a face with at least two vertices")
        if face not in self.faces:
            raise ValueError(f"{sorted(face)} is not a face of the complex")
        new = self.m + 1
        facets = []
        for f in self.facets:
            if face <= f:
                facets.extend((f - {i}) | {new} for i in face)
            else:
                facets.append(f)
        return SimplicialComplex(new, facets)

    def relabel(self, perm: dict[int, int]) -> "SimplicialComplex":
        """Apply a bijection of [m] to vertex labels."""
        return SimplicialComplex(self.m, [[perm[i] for i in f] for f in self.facets])

    def to_json(self) -> dict:
        return {"m": self.m, "max_faces": [list(f) for f in self.sorted_facets()],
                "ghosts": sorted(self.ghosts)}


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """The boundary of the n-simplex on [n+1]."""
    m = n + 1
    return SimplicialComplex(m, [[j for j in range(1, m + 1) if j != i] for i in range(1, m + 1)])


def cycle(m: int) -> SimplicialComplex:
    """The boundary of an m-gon, vertices in cyclic order 1..m."""
    return SimplicialComplex(m, [[i, i % m + 1] for i in range(1, m + 1)])
