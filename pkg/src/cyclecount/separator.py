"""Balanced cycle separators of planar triangulations.

A separator is a simple cycle A whose removal splits the sphere into two
discs.  Candidates are fundamental cycles of a breadth-first spanning
tree; among the candidates meeting the hard balance bound (each side at
most ceil(2n/3) vertices) the shortest one is chosen, with ties broken by
the lexicographically smallest canonical vertex list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EngineError
from .plane_graph import PlanarTriangulation


@dataclass(frozen=True)
class SeparatorCycle:
    """A simple separating cycle.

    ``vertices[i]`` and ``vertices[i+1]`` (cyclically) are joined by
    ``edge_list[i]``.  ``d1_faces``/``d2_faces`` are the face ids of the
    two sides; ``side1_vertices``/``side2_vertices`` the vertices strictly
    inside each side.
    """

    vertices: tuple[int, ...]
    edge_list: tuple[int, ...]
    d1_faces: frozenset[int]
    d2_faces: frozenset[int]
    side1_vertices: frozenset[int]
    side2_vertices: frozenset[int]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_list)

    def balance(self, n: int) -> float:
        return max(len(self.side1_vertices), len(self.side2_vertices)) / max(n, 1)


def _canonical_cycle_key(vertices: tuple[int, ...]) -> tuple[int, ...]:
    best = None
    for seq in (vertices, tuple(reversed(vertices))):
        for r in range(len(seq)):
            rot = seq[r:] + seq[:r]
            if best is None or rot < best:
                best = rot
    return best


def _bfs_tree(tri: PlanarTriangulation, root: int):
    """Breadth-first spanning tree: parent vertex and parent edge maps."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in tri.vertices}
    for e in sorted(tri.edges):
        u, v = tri.edges[e]
        if u == v:
            continue
        adj[u].append((e, v))
        adj[v].append((e, u))
    parent: dict[int, tuple[int, int] | None] = {root: None}
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for e, w in adj[u]:
            if w not in parent:
                parent[w] = (e, u)
                order.append(w)
    return parent


def _fundamental_cycle(tri, parent, e0):
    """Vertex and edge lists of the fundamental cycle of non-tree edge e0."""
    u, v = tri.edges[e0]
    path_u = [u]
    while parent[path_u[-1]] is not None:
        path_u.append(parent[path_u[-1]][1])
    depth = {w: i for i, w in enumerate(path_u)}
    path_v = [v]
    while path_v[-1] not in depth:
        path_v.append(parent[path_v[-1]][1])
    lca = path_v[-1]
    seg_u = path_u[: depth[lca] + 1]  # u .. lca
    seg_v = path_v[:-1]  # v .. just below lca
    verts = seg_u + list(reversed(seg_v))  # u .. lca .. v
    edges = []
    for w in seg_u[:-1]:
        edges.append(parent[w][0])
    for w in reversed(seg_v):
        edges.append(parent[w][0])
    edges.append(e0)  # closes v -> u
    return tuple(verts), tuple(edges)


def _classify_sides(tri: PlanarTriangulation, cycle_edges: frozenset[int]):
    """Split faces into the two components separated by the cycle.

    Returns (faces1, faces2) with faces1 containing the smallest face id,
    or None if the cycle does not separate the faces into exactly two
    components.
    """
    ef = tri.edge_faces()
    adj: dict[int, set[int]] = {f: set() for f in tri.faces}
    for e, (f1, f2) in ef.items():
        if e in cycle_edges:
            continue
        adj[f1].add(f2)
        adj[f2].add(f1)
    comps = []
    seen: set[int] = set()
    for f in sorted(tri.faces):
        if f in seen:
            continue
        comp = {f}
        stack = [f]
        seen.add(f)
        while stack:
            g = stack.pop()
            for h in adj[g]:
                if h not in seen:
                    seen.add(h)
                    comp.add(h)
                    stack.append(h)
        comps.append(comp)
    if len(comps) != 2:
        return None
    return frozenset(comps[0]), frozenset(comps[1])


def _side_vertices(tri, faces, cycle_vertices):
    out = set()
    for f in faces:
        for e in tri.faces[f]:
            out.update(tri.edges[e])
    return frozenset(out - set(cycle_vertices))


def find_cycle_separator(tri: PlanarTriangulation) -> SeparatorCycle:
    """Find a balanced simple-cycle separator, or raise EngineError."""
    n = len(tri.vertices)
    bound = math.ceil(2 * n / 3)
    for root in sorted(tri.vertices):
        parent = _bfs_tree(tri, root)
        if len(parent) != n:
            raise EngineError("triangulation is not connected")
        tree_edges = {pe[0] for pe in parent.values() if pe is not None}
        best = None
        best_key = None
        for e0 in sorted(tri.edges):
            if e0 in tree_edges:
                continue
            u, v = tri.edges[e0]
            if u == v:
                continue
            verts, edges = _fundamental_cycle(tri, parent, e0)
            if len(set(verts)) != len(verts):
                continue
            cyc_edges = frozenset(edges)
            if len(cyc_edges) != len(edges):
                continue
            sides = _classify_sides(tri, cyc_edges)
            if sides is None:
                continue
            faces1, faces2 = sides
            sv1 = _side_vertices(tri, faces1, verts)
            sv2 = _side_vertices(tri, faces2, verts)
            if max(len(sv1), len(sv2)) > bound:
                continue
            key = (len(edges), _canonical_cycle_key(verts))
            if best_key is None or key < best_key:
                best_key = key
                best = SeparatorCycle(
                    vertices=verts,
                    edge_list=edges,
                    d1_faces=faces1,
                    d2_faces=faces2,
                    side1_vertices=sv1,
                    side2_vertices=sv2,
                )
        if best is not None:
            return best
    raise EngineError(
        "no balanced cycle separator found on %d vertices" % n
    )


@dataclass
class DiscGraph:
    """One side of a separator, together with its boundary.

    ``edges`` contains the interior edges and the boundary edges;
    ``boundary`` lists the boundary edge ids in cyclic order.  Faces are a
    subset of the parent triangulation's faces.
    """

    vertices: set[int]
    edges: dict[int, tuple[int, int]]
    faces: dict[int, tuple[int, int, int]]
    boundary: tuple[int, ...]
    interior_edges: frozenset[int]


def split_discs(tri: PlanarTriangulation, sep: SeparatorCycle) -> tuple[DiscGraph, DiscGraph]:
    """Build the two disc graphs on either side of a separator."""
    ef = tri.edge_faces()
    out = []
    for faces in (sep.d1_faces, sep.d2_faces):
        face_map = {f: tri.faces[f] for f in faces}
        interior = set()
        edges = {}
        verts = set(sep.vertices)
        for f in faces:
            for e in tri.faces[f]:
                edges[e] = tri.edges[e]
                verts.update(tri.edges[e])
                if e not in sep.edge_set:
                    interior.add(e)
        for e in interior:
            f1, f2 = ef[e]
            if not (f1 in faces and f2 in faces):
                raise EngineError("interior edge %d crosses the separator" % e)
        out.append(
            DiscGraph(
                vertices=verts,
                edges=edges,
                faces=face_map,
                boundary=sep.edge_list,
                interior_edges=frozenset(interior),
            )
        )
    return out[0], out[1]
