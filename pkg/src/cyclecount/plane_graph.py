"""Embedded cubic planar multigraphs, their duals, and arc sequences.

A cubic planar multigraph is given combinatorially: each vertex carries a
cyclic (counter-clockwise) rotation of its three incident edge ids.  Faces
are recovered by tracing darts, and the dual of a valid input is a planar
triangulation (a multigraph all of whose faces are triangles).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import GraphFormatError, ValidationError

HEADER = "cubic-planar v1"

# An endpoint of an arc: ("f", face_id) for a face of the triangulation,
# or ("d", edge_id) for the dangling vertex of a disc boundary edge.
Token = tuple[str, int]


class Arc(NamedTuple):
    """A directed traversal of a dual edge, from ``tail`` to ``head``."""

    edge: int
    tail: Token
    head: Token

    def flipped(self) -> "Arc":
        return Arc(self.edge, self.head, self.tail)


def reverse_arcs(arcs: Iterable[Arc]) -> tuple[Arc, ...]:
    """The same closed walk traversed in the opposite direction."""
    return tuple(a.flipped() for a in reversed(list(arcs)))


def canonical_arc_sequence(arcs: Iterable[Arc]) -> tuple[Arc, ...]:
    """Canonical representative of a cyclic arc sequence.

    Two sequences are equivalent when one is a rotation of the other, or a
    rotation of the full reversal (every arc flipped and the order
    reversed).  Returns the lexicographically smallest representative.
    """
    seq = tuple(arcs)
    if not seq:
        return seq
    best = None
    for cand in (seq, reverse_arcs(seq)):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            if best is None or rot < best:
                best = rot
    return best


@dataclass(frozen=True)
class CubicPlanarGraph:
    """A 3-regular planar multigraph with a rotation system.

    ``edges`` maps edge id to its (unordered) endpoints; ``rotation`` maps
    each vertex to the counter-clockwise cyclic order of its three incident
    edge ids.  ``faces`` lists each face as a tuple of darts
    ``(edge_id, tail_vertex)`` in traversal order.
    """

    vertices: tuple[int, ...]
    edges: dict[int, tuple[int, int]]
    rotation: dict[int, tuple[int, int, int]]
    faces: tuple[tuple[tuple[int, int], ...], ...] = field(default=())

    def face_edge_sets(self) -> list[tuple[int, ...]]:
        return [tuple(e for e, _ in f) for f in self.faces]

    def other_end(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        return w if v == u else u


def _trace_faces(
    vertices: Iterable[int],
    edges: dict[int, tuple[int, int]],
    rotation: dict[int, tuple[int, ...]],
) -> list[tuple[tuple[int, int], ...]]:
    """Trace the faces of an embedded graph as lists of darts.

    A dart is ``(edge_id, tail_vertex)``.  The successor of a dart
    ``(e, u)`` with head ``v`` is the dart leaving ``v`` along the edge
    preceding ``e`` in the rotation at ``v``.
    """
    darts = set()
    for e, (u, v) in edges.items():
        darts.add((e, u))
        darts.add((e, v))

    def succ(dart):
        e, u = dart
        a, b = edges[e]
        v = b if u == a else a
        rot = rotation[v]
        i = rot.index(e)
        return (rot[(i - 1) % len(rot)], v)

    faces = []
    seen = set()
    for start in sorted(darts):
        if start in seen:
            continue
        face = []
        d = start
        while True:
            face.append(d)
            seen.add(d)
            d = succ(d)
            if d == start:
                break
            if d in seen:
                raise ValidationError(
                    "face tracing revisited dart %r before closing" % (d,)
                )
        faces.append(tuple(face))
    return faces


def _validate_cubic(
    vertices: list[int],
    edges: dict[int, tuple[int, int]],
    rotation: dict[int, tuple[int, ...]],
) -> CubicPlanarGraph:
    vset = set(vertices)
    if len(vset) != len(vertices):
        raise ValidationError("duplicate vertex ids")
    incidence: dict[int, int] = {e: 0 for e in edges}
    for e, (u, v) in edges.items():
        if u == v:
            raise ValidationError("edge %d is a loop" % e)
        if u not in vset or v not in vset:
            raise ValidationError("edge %d references unknown vertex" % e)
    for v in vertices:
        rot = rotation.get(v)
        if rot is None:
            raise ValidationError("vertex %d has no rotation" % v)
        if len(rot) != 3:
            raise ValidationError("vertex %d is not 3-regular" % v)
        if len(set(rot)) != 3:
            raise ValidationError("vertex %d repeats an edge in its rotation" % v)
        for e in rot:
            if e not in edges:
                raise ValidationError("vertex %d rotation references unknown edge %d" % (v, e))
            if v not in edges[e]:
                raise ValidationError("edge %d in rotation of %d is not incident on it" % (e, v))
            incidence[e] += 1
    for e, count in incidence.items():
        if count != 2:
            raise ValidationError("edge %d appears in %d rotations, expected 2" % (e, count))

    # connectivity
    if vertices:
        seen = {vertices[0]}
        stack = [vertices[0]]
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        for u, v in edges.values():
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != vset:
            raise ValidationError("graph is not connected")

    faces = _trace_faces(vertices, edges, rotation)
    euler = len(vertices) - len(edges) + len(faces)
    if euler != 2:
        raise ValidationError(
            "rotation system is not spherical: V-E+F = %d, expected 2 "
            "(the graph may be non-planar)" % euler
        )
    return CubicPlanarGraph(
        vertices=tuple(vertices),
        edges=dict(edges),
        rotation={v: tuple(r) for v, r in rotation.items()},
        faces=tuple(faces),
    )


def parse_cubic(text: str) -> CubicPlanarGraph:
    """Parse a cubic planar graph from its textual or JSON description."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_lines(text)


def _parse_json(text: str) -> CubicPlanarGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError("invalid JSON: %s" % exc) from exc
    try:
        nverts = int(data["vertices"])
        edges = {int(e): (int(u), int(v)) for e, u, v in data["edges"]}
        rotation = {int(v): tuple(int(e) for e in rot) for v, rot in data["rotations"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError("malformed JSON graph: %s" % exc) from exc
    vertices = sorted(rotation)
    if len(vertices) != nverts:
        raise GraphFormatError(
            "vertex count %d does not match %d rotations" % (nverts, len(vertices))
        )
    try:
        return _validate_cubic(vertices, edges, rotation)
    except ValidationError:
        raise


def _parse_lines(text: str) -> CubicPlanarGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != HEADER:
        raise GraphFormatError("missing header line %r" % HEADER)
    nverts = None
    edges: dict[int, tuple[int, int]] = {}
    rotation: dict[int, tuple[int, ...]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        try:
            if parts[0] == "vertices":
                nverts = int(parts[1])
            elif parts[0] == "edge":
                e, u, v = int(parts[1]), int(parts[2]), int(parts[3])
                if e in edges:
                    raise GraphFormatError("duplicate edge id %d" % e)
                edges[e] = (u, v)
            elif parts[0] == "rot":
                v = int(parts[1])
                if v in rotation:
                    raise GraphFormatError("duplicate rotation for vertex %d" % v)
                rotation[v] = tuple(int(x) for x in parts[2:])
            else:
                raise GraphFormatError("unknown directive %r" % parts[0])
        except (IndexError, ValueError) as exc:
            raise GraphFormatError("malformed line %r" % ln) from exc
    if nverts is None:
        raise GraphFormatError("missing 'vertices' line")
    vertices = sorted(rotation)
    if len(vertices) != nverts:
        raise GraphFormatError(
            "vertex count %d does not match %d rotations" % (nverts, len(vertices))
        )
    return _validate_cubic(vertices, edges, rotation)


def serialize_cubic(graph: CubicPlanarGraph) -> str:
    """Write a graph in the line-oriented text format."""
    out = [HEADER, "vertices %d" % len(graph.vertices)]
    for e in sorted(graph.edges):
        u, v = graph.edges[e]
        out.append("edge %d %d %d" % (e, u, v))
    for v in sorted(graph.rotation):
        out.append("rot %d %s" % (v, " ".join(str(e) for e in graph.rotation[v])))
    return "\n".join(out) + "\n"


@dataclass
class PlanarTriangulation:
    """A planar multigraph whose faces are all triangles.

    ``edges`` maps edge id to (unordered) endpoints; loops are permitted on
    intermediate graphs produced by contraction.  ``faces`` maps face id to
    the tuple of its three (distinct) boundary edge ids.
    """

    vertices: set[int]
    edges: dict[int, tuple[int, int]]
    faces: dict[int, tuple[int, int, int]]

    def edge_faces(self) -> dict[int, tuple[int, ...]]:
        ef: dict[int, list[int]] = {e: [] for e in self.edges}
        for fid in sorted(self.faces):
            for e in self.faces[fid]:
                ef[e].append(fid)
        return {e: tuple(fs) for e, fs in ef.items()}

    def degree(self, v: int) -> int:
        d = 0
        for u, w in self.edges.values():
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def dual_edge_ends(self) -> dict[int, tuple[Token, Token]]:
        """Endpoints of each edge of the dual multigraph, as face tokens."""
        ef = self.edge_faces()
        out = {}
        for e, fs in ef.items():
            if len(fs) != 2:
                raise ValidationError("edge %d lies on %d faces, expected 2" % (e, len(fs)))
            out[e] = (("f", fs[0]), ("f", fs[1]))
        return out


def validate_triangulation(tri: PlanarTriangulation) -> None:
    """Check the structural invariants of a triangulation; raise on failure."""
    for fid, fe in tri.faces.items():
        if len(fe) != 3 or len(set(fe)) != 3:
            raise ValidationError("face %d does not have 3 distinct edges" % fid)
        for e in fe:
            if e not in tri.edges:
                raise ValidationError("face %d references unknown edge %d" % (fid, e))
        counts: dict[int, int] = {}
        for e in fe:
            for v in tri.edges[e]:
                counts[v] = counts.get(v, 0) + 1
        if any(c % 2 for c in counts.values()):
            raise ValidationError("face %d is not a closed triangle walk" % fid)
    ef = tri.edge_faces()
    for e, fs in ef.items():
        if len(fs) != 2:
            raise ValidationError("edge %d lies on %d faces, expected 2" % (e, len(fs)))
        if fs[0] == fs[1]:
            raise ValidationError("edge %d has the same face on both sides" % e)
    for e, (u, v) in tri.edges.items():
        if u not in tri.vertices or v not in tri.vertices:
            raise ValidationError("edge %d references unknown vertex" % e)
    if len(tri.vertices) - len(tri.edges) + len(tri.faces) != 2:
        raise ValidationError("triangulation violates the Euler relation")
    if len(tri.vertices) >= 3:
        for v in tri.vertices:
            if tri.degree(v) < 2:
                raise ValidationError("vertex %d has degree < 2" % v)
    # connectivity
    if tri.vertices:
        start = next(iter(sorted(tri.vertices)))
        seen = {start}
        stack = [start]
        adj: dict[int, list[int]] = {v: [] for v in tri.vertices}
        for u, v in tri.edges.values():
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != tri.vertices:
            raise ValidationError("triangulation is not connected")


def dual(graph: CubicPlanarGraph) -> PlanarTriangulation:
    """The dual triangulation of an embedded cubic planar graph.

    Faces of the input become vertices (numbered in traced order), edges
    keep their ids, and each input vertex becomes a triangular face whose
    id is the vertex id.
    """
    dart_face: dict[tuple[int, int], int] = {}
    for fid, f in enumerate(graph.faces):
        for d in f:
            dart_face[d] = fid
    edges: dict[int, tuple[int, int]] = {}
    for e, (u, v) in graph.edges.items():
        edges[e] = (dart_face[(e, u)], dart_face[(e, v)])
    faces = {v: graph.rotation[v] for v in graph.vertices}
    tri = PlanarTriangulation(
        vertices=set(range(len(graph.faces))),
        edges=edges,
        faces=faces,
    )
    validate_triangulation(tri)
    return tri
