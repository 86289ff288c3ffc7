"""Random generation of 3-regular planar multigraphs.

Graphs are generated as duals of random planar triangulations.  A
triangulation is grown from an oriented tetrahedron by repeatedly
inserting a vertex inside a random face, then optionally randomised
further with diagonal flips.  Because face orientations are kept globally
consistent, the ordered edge triple of each face is a valid rotation for
the corresponding dual vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ValidationError
from .plane_graph import CubicPlanarGraph, _validate_cubic


@dataclass
class _OrientedTriangulation:
    """A triangulation with oriented faces.

    ``faces[i] = ((v0, v1, v2), (e01, e12, e20))`` where the edges follow
    the vertex walk; every edge is traversed in opposite directions by its
    two faces.
    """

    edges: dict[int, tuple[int, int]]
    faces: list[tuple[tuple[int, int, int], tuple[int, int, int]]]
    next_vertex: int
    next_edge: int

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges.values())


def _tetrahedron() -> _OrientedTriangulation:
    edges = {0: (0, 1), 1: (0, 2), 2: (0, 3), 3: (1, 2), 4: (1, 3), 5: (2, 3)}
    faces = [
        ((0, 1, 2), (0, 3, 1)),
        ((0, 3, 1), (2, 4, 0)),
        ((0, 2, 3), (1, 5, 2)),
        ((1, 3, 2), (4, 5, 3)),
    ]
    return _OrientedTriangulation(edges=edges, faces=faces, next_vertex=4, next_edge=6)


def _insert_vertex(tri: _OrientedTriangulation, face_idx: int) -> None:
    (v0, v1, v2), (a, b, c) = tri.faces[face_idx]
    u = tri.next_vertex
    tri.next_vertex += 1
    g0, g1, g2 = tri.next_edge, tri.next_edge + 1, tri.next_edge + 2
    tri.next_edge += 3
    tri.edges[g0] = (v0, u)
    tri.edges[g1] = (v1, u)
    tri.edges[g2] = (v2, u)
    tri.faces[face_idx] = ((v0, v1, u), (a, g1, g0))
    tri.faces.append(((v1, v2, u), (b, g2, g1)))
    tri.faces.append(((v2, v0, u), (c, g0, g2)))


def _face_with_edge_forward(tri, e, x, y):
    """Index of the face that traverses edge e from x to y, plus the
    positions of e within it."""
    for idx, (vs, es) in enumerate(tri.faces):
        for k in range(3):
            if es[k] == e and vs[k] == x and vs[(k + 1) % 3] == y:
                return idx, k
    raise ValidationError("edge %d not traversed %d->%d by any face" % (e, x, y))


def _flip_edge(tri: _OrientedTriangulation, e: int) -> bool:
    """Replace the diagonal e of its surrounding quadrilateral by the
    other diagonal.  Returns False when the flip would degenerate."""
    x, y = tri.edges[e]
    if x == y:
        return False
    if tri.degree(x) <= 3 or tri.degree(y) <= 3:
        return False
    i1, k1 = _face_with_edge_forward(tri, e, x, y)
    i2, k2 = _face_with_edge_forward(tri, e, y, x)
    if i1 == i2:
        return False
    vs1, es1 = tri.faces[i1]
    vs2, es2 = tri.faces[i2]
    a_v = vs1[(k1 + 2) % 3]  # apex of face 1: x -> y -> a_v
    b_v = vs2[(k2 + 2) % 3]  # apex of face 2: y -> x -> b_v
    if a_v == b_v:
        return False
    ya = es1[(k1 + 1) % 3]
    ax = es1[(k1 + 2) % 3]
    xb = es2[(k2 + 1) % 3]
    by = es2[(k2 + 2) % 3]
    # the quad boundary must consist of four distinct edges
    if len({ya, ax, xb, by}) != 4:
        return False
    tri.edges[e] = (a_v, b_v)
    tri.faces[i1] = ((x, b_v, a_v), (xb, e, ax))
    tri.faces[i2] = ((b_v, y, a_v), (by, ya, e))
    return True


def dual_cubic(tri: _OrientedTriangulation) -> CubicPlanarGraph:
    """The cubic planar dual: one vertex per face, rotations from the
    oriented edge triples."""
    vertices = tuple(range(len(tri.faces)))
    edge_ends: dict[int, list[int]] = {}
    for idx, (_vs, es) in enumerate(tri.faces):
        for e in es:
            edge_ends.setdefault(e, []).append(idx)
    edges = {}
    for e, fs in sorted(edge_ends.items()):
        if len(fs) != 2:
            raise ValidationError("edge %d lies on %d faces" % (e, len(fs)))
        edges[e] = (min(fs), max(fs))
    rotation = {idx: tuple(es) for idx, (_vs, es) in enumerate(tri.faces)}
    return _validate_cubic(list(vertices), edges, rotation)


def random_cubic_planar(
    n: int, rng: random.Random | None = None, seed: int | None = None,
    flips: int | None = None,
) -> CubicPlanarGraph:
    """A random connected 3-regular planar multigraph on ``n`` vertices.

    ``n`` must be even and at least 4.  ``flips`` defaults to ``2 * n``
    random diagonal flips applied after growing the triangulation.
    """
    if n < 4 or n % 2:
        raise ValidationError("a 3-regular graph needs an even vertex count >= 4")
    if rng is None:
        rng = random.Random(seed)
    tri = _tetrahedron()
    while len(tri.faces) < n:
        _insert_vertex(tri, rng.randrange(len(tri.faces)))
    if flips is None:
        flips = 2 * n
    edge_ids = sorted(tri.edges)
    for _ in range(flips):
        _flip_edge(tri, rng.choice(edge_ids))
    return dual_cubic(tri)
