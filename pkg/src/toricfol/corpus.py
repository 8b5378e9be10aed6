"""Standard fans used in tests, demos and documentation."""

from __future__ import annotations

from .complexes import boundary_of_simplex
from .fan import MarkedFan
from .scalar import sqrt_of


def simplex_fan(n: int) -> MarkedFan:
    """Fan of projective n-space: rays e_1, ..., e_n and -(e_1 + ... + e_n)."""
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple([-1] * n))
    return MarkedFan(boundary_of_simplex(n), rays, n)


def projective_plane_fan() -> MarkedFan:
    return simplex_fan(2)


def projective_plane_with_ghost() -> MarkedFan:
    """The projective-plane fan with a ghost vertex 4, so that m - n = 2."""
    return MarkedFan.from_faces([(1, 0), (0, 1), (-1, -1), (0, 0)],
                                [[1, 2], [2, 3], [1, 3]], ghosts=[4])


def square_fan() -> MarkedFan:
    """Rays (1,0), (0,1), (-1,0), (0,-1) in cyclic order (P^1 x P^1)."""
    return MarkedFan.from_faces([(1, 0), (0, 1), (-1, 0), (0, -1)],
                                [[1, 2], [2, 3], [3, 4], [1, 4]])


def hexagon_fan() -> MarkedFan:
    """Six rays (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1) in cyclic order."""
    rays = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    return MarkedFan.from_faces(rays, [[i, i % 6 + 1] for i in range(1, 7)])


def hopf_fan() -> MarkedFan:
    """Rays 1 and -1 on the line plus a ghost vertex 3."""
    return MarkedFan.from_faces([(1,), (-1,), (0,)], [[1], [2]], ghosts=[3])


def sqrt2_line_fan() -> MarkedFan:
    """Rays 1 and -sqrt(2) on the line plus a ghost vertex 3."""
    return MarkedFan.from_faces([(1,), (-sqrt_of(2),), (0,)], [[1], [2]], ghosts=[3])


def sqrt2_plane_fan() -> MarkedFan:
    """Rays (1,0), (0,1), (-1,-sqrt(2)): a complete fan with an irrational ray."""
    return MarkedFan.from_faces([(1, 0), (0, 1), (-1, -sqrt_of(2))],
                                [[1, 2], [2, 3], [1, 3]])


def twisted_fan() -> MarkedFan:
    """The classical complete simplicial 3-fan that is not polytopal.

    An outer triangle 4e_1, 4e_2, 4e_3 surrounds an inner triangle
    (2,1,1), (1,2,1), (1,1,2); the three quadrilaterals between them are
    split by diagonals all turning the same way, and the fan is closed by
    the ray (-1,-1,-1).
    """
    outer = [(4, 0, 0), (0, 4, 0), (0, 0, 4)]
    inner = [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    faces = [[4, 5, 6]]
    for i in range(3):
        j = (i + 1) % 3
        faces += [[i + 1, j + 1, j + 4], [i + 1, j + 4, i + 4], [i + 1, j + 1, 7]]
    return MarkedFan.from_faces(outer + inner + [(-1, -1, -1)], faces)


def standard_corpus() -> dict:
    """Named complete fans covering rational, irrational and ghost cases."""
    return {
        "line": simplex_fan(1),
        "projective_plane": simplex_fan(2),
        "projective_space": simplex_fan(3),
        "square": square_fan(),
        "hexagon": hexagon_fan(),
        "hopf": hopf_fan(),
        "sqrt2_line": sqrt2_line_fan(),
        "sqrt2_plane": sqrt2_plane_fan(),
        "projective_plane_ghost": projective_plane_with_ghost(),
    }
