"""Brute-force enumeration of simple cycles, used as a reference count.

Works on any multigraph given as an edge-id -> endpoints mapping.  Loops
are never part of a simple cycle; a pair of parallel edges forms a valid
2-cycle.  Each cycle is reported once, as a frozenset of edge ids.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

from .plane_graph import Arc, CubicPlanarGraph


@dataclass(frozen=True)
class CycleFilter:
    """Constraints applied to enumerated cycles.

    ``require`` edges must all be used, ``forbid`` edges must be avoided,
    ``length`` (if not None) fixes the number of edges, and ``conform_to``
    (if not None) is an arc sequence the cycle must conform to.
    """

    require: frozenset[int] = frozenset()
    forbid: frozenset[int] = frozenset()
    length: int | None = None
    conform_to: tuple[Arc, ...] | None = None


def simple_cycles(
    edge_ends: dict[int, tuple[Hashable, Hashable]],
    forbid: frozenset[int] = frozenset(),
) -> Iterator[frozenset[int]]:
    """Yield every simple cycle of the multigraph as an edge-id set.

    A cycle is found exactly once, rooted at its smallest edge id: the
    remaining edges form a simple path between that edge's endpoints using
    only larger edge ids.
    """
    adj: dict[Hashable, list[tuple[int, Hashable]]] = {}
    for e in sorted(edge_ends):
        if e in forbid:
            continue
        u, v = edge_ends[e]
        if u == v:
            continue
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))

    for e0 in sorted(edge_ends):
        if e0 in forbid:
            continue
        u0, v0 = edge_ends[e0]
        if u0 == v0:
            continue
        # simple paths v0 -> u0 over edges with id > e0
        path: list[int] = []
        visited = {v0}

        def extend(cur) -> Iterator[frozenset[int]]:
            for e, w in adj.get(cur, ()):
                if e <= e0 or e in path:
                    continue
                if w == u0:
                    yield frozenset([e0, e, *path])
                    continue
                if w in visited:
                    continue
                visited.add(w)
                path.append(e)
                yield from extend(w)
                path.pop()
                visited.discard(w)

        yield from extend(v0)


def cycle_traversal(
    cycle: frozenset[int],
    edge_ends: dict[int, tuple[Hashable, Hashable]],
) -> list[tuple[int, Hashable, Hashable]]:
    """One cyclic traversal of a simple cycle, as (edge, tail, head) steps."""
    if not cycle:
        return []
    incident: dict[Hashable, list[int]] = {}
    for e in cycle:
        for v in edge_ends[e]:
            incident.setdefault(v, []).append(e)
    e0 = min(cycle)
    tail, head = edge_ends[e0]
    steps = [(e0, tail, head)]
    used = {e0}
    cur = head
    while cur != tail:
        nxt = [e for e in incident[cur] if e not in used]
        e = nxt[0]
        a, b = edge_ends[e]
        other = b if cur == a else a
        steps.append((e, cur, other))
        used.add(e)
        cur = other
    return steps


def conforms(
    cycle: frozenset[int],
    arcs: Iterable[Arc],
    edge_ends: dict[int, tuple[Hashable, Hashable]],
) -> bool:
    """Whether some cyclic traversal of ``cycle`` visits the given arcs in
    their cyclic order with matching orientations."""
    arcs = tuple(arcs)
    if not arcs:
        return True
    if not {a.edge for a in arcs} <= cycle:
        return False
    return steps_conform(cycle_traversal(cycle, edge_ends), arcs)


def steps_conform(steps: list[tuple], arcs: tuple[Arc, ...]) -> bool:
    """Whether a precomputed cyclic traversal conforms to the arcs."""
    want_edges = {a.edge for a in arcs}
    for direction in (steps, [(e, h, t) for e, t, h in reversed(steps)]):
        seen = [Arc(e, t, h) for e, t, h in direction if e in want_edges]
        if len(seen) != len(arcs):
            continue
        # rotate so the first arc matches arcs[0]
        try:
            i = next(k for k, a in enumerate(seen) if a.edge == arcs[0].edge)
        except StopIteration:
            continue
        rotated = seen[i:] + seen[:i]
        if tuple(rotated) == arcs:
            return True
    return False


def oracle_count(
    graph: CubicPlanarGraph,
    filt: CycleFilter | None = None,
    include_empty: bool = False,
) -> int:
    """Count simple cycles of the graph matching the filter."""
    return sum(oracle_count_by_length(graph, filt, include_empty).values())

def oracle_count_by_length(
    graph: CubicPlanarGraph,
    filt: CycleFilter | None = None,
    include_empty: bool = False,
) -> Counter:
    """Count matching simple cycles, grouped by number of edges."""
    filt = filt or CycleFilter()
    counts: Counter = Counter()
    if include_empty and not filt.require and (
        filt.conform_to is None or not filt.conform_to
    ):
        if filt.length is None or filt.length == 0:
            counts[0] += 1
    for cyc in enumerate_cycles(graph, filt):
        counts[len(cyc)] += 1
    return counts


def enumerate_cycles(
    graph: CubicPlanarGraph,
    filt: CycleFilter | None = None,
) -> Iterator[frozenset[int]]:
    """Yield the (non-empty) simple cycles of the graph matching the filter."""
    filt = filt or CycleFilter()
    ends_tok = None
    if filt.conform_to is not None:
        # arc endpoints use ("f", vertex) tokens: a vertex of this graph is
        # a face of the triangulation it is dual to
        ends_tok = {e: (("f", u), ("f", v)) for e, (u, v) in graph.edges.items()}
    for cyc in simple_cycles(graph.edges, forbid=filt.forbid):
        if not filt.require <= cyc:
            continue
        if filt.length is not None and len(cyc) != filt.length:
            continue
        if ends_tok is not None:
            if not conforms(cyc, filt.conform_to, ends_tok):
                continue
        yield cyc
