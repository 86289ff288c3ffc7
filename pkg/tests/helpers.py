"""Shared test utilities: corpus loading, independent reference counters,
and a direct enumerator of constrained partial walk systems on disc states.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter

from cyclecount.oracle import conforms
from cyclecount.plane_graph import Arc, CubicPlanarGraph, parse_cubic
from cyclecount.stitch import DiscState

GRAPHS = os.path.join(os.path.dirname(__file__), "..", "graphs")

CORPUS = ["theta", "k4", "prism3", "cube", "prism5", "dodecahedron"]


def load_graph(name: str) -> CubicPlanarGraph:
    with open(os.path.join(GRAPHS, name + ".g"), "r", encoding="utf-8") as fh:
        return parse_cubic(fh.read())


def load_text(name: str) -> str:
    with open(os.path.join(GRAPHS, name + ".g"), "r", encoding="utf-8") as fh:
        return fh.read()


def subset_cycle_count(edge_ends: dict[int, tuple]) -> int:
    """Count simple cycles by checking every edge subset (tiny graphs only).

    A simple cycle is a non-empty connected edge set in which every
    incident vertex has degree exactly 2.
    """
    edges = sorted(edge_ends)
    assert len(edges) <= 16, "subset counter is exponential in the edge count"
    count = 0
    for r in range(2, len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            deg: Counter = Counter()
            for e in sub:
                u, v = edge_ends[e]
                if u == v:
                    deg[u] += 3  # loops never sit on a simple cycle
                    continue
                deg[u] += 1
                deg[v] += 1
            if any(d != 2 for d in deg.values()):
                continue
            # connectivity over the chosen edges
            adj: dict = {}
            for e in sub:
                u, v = edge_ends[e]
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
            start = next(iter(adj))
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == len(deg):
                count += 1
    return count


def _disc_dual_ends(st: DiscState) -> dict[int, tuple]:
    """Dual adjacency of a disc state: faces plus dangling boundary tokens."""
    ends = {}
    for e in st.edge_ends:
        fs = sorted(st.edge_faces[e])
        if len(fs) == 2:
            ends[e] = (("f", fs[0]), ("f", fs[1]))
        elif len(fs) == 1 and e in st.boundary:
            ends[e] = (("f", fs[0]), ("d", e))
        else:
            raise AssertionError("edge %d has %d faces" % (e, len(fs)))
    return ends


def enumerate_walk_systems(st: DiscState):
    """Yield every constrained partial walk system of a disc state.

    A system is an edge set whose dual components are either a single
    closed cycle (when no boundary edge is supported) or vertex-disjoint
    paths pairing each supported boundary edge with its near-side partner.
    Systems must use every required edge, avoid forbidden edges, and
    conform to the state's cyclic arc sequence.  Each yielded value is the
    frozenset of used edge ids.
    """
    ends = _disc_dual_ends(st)
    support = frozenset(e for e in st.boundary if st.l1[e] is not None)
    x = frozenset(st.x_set)
    y = frozenset(st.y_set)
    free = [e for e in sorted(st.edge_ends) if e not in y]

    for r in range(len(free) + 1):
        for sub in itertools.combinations(free, r):
            f = frozenset(sub)
            if not x <= f:
                continue
            if f & set(st.boundary) != support:
                continue
            if _valid_system(st, f, ends, support):
                yield f


def _valid_system(st, f, ends, support) -> bool:
    deg: Counter = Counter()
    adj: dict = {}
    for e in f:
        u, v = ends[e]
        if u == v:
            return False
        deg[u] += 1
        deg[v] += 1
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    for tok, d in deg.items():
        want = 1 if tok[0] == "d" else 2
        if d != want:
            return False
    if not support:
        if not f:
            return not st.arcs and not st.x_set
        # must be one single closed cycle
        start = next(iter(adj))
        seen_v = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for _, w in adj[cur]:
                if w not in seen_v:
                    seen_v.add(w)
                    stack.append(w)
        if len(seen_v) != len(deg):
            return False
        return conforms(f, tuple(st.arcs), ends) if st.arcs else True
    # paths must pair each supported edge with its near-side partner
    path_of: dict[int, list[tuple[int, tuple, tuple]]] = {}
    seen_edges: set[int] = set()
    for e in sorted(support):
        if e in seen_edges:
            continue
        steps = []
        cur = ("d", e)
        prev = None
        while True:
            options = [(g, w) for g, w in adj[cur] if g != prev]
            if len(options) != 1:
                return False
            g, w = options[0]
            steps.append((g, cur, w))
            seen_edges.add(g)
            if w[0] == "d":
                break
            prev = g
            cur = w
        end = steps[-1][2][1]
        if st.l1[e] != end:
            return False
        path_of[e] = steps
        path_of[end] = [(g, h, t) for g, t, h in reversed(steps)]
    # no components besides the paths
    if seen_edges != set(f):
        return False
    if not st.arcs:
        return True
    # grand tour: concatenate paths via the far-side pairing and compare
    # the traversed arc sequence with the state's arcs, cyclically, in
    # either direction
    tour = _grand_tour(st, path_of, support)
    if tour is None:
        return False
    arc_edges = {a.edge for a in st.arcs}
    if not arc_edges <= set(f):
        return False
    for direction in (tour, [(g, h, t) for g, t, h in reversed(tour)]):
        seen = [Arc(g, t, h) for g, t, h in direction if g in arc_edges]
        if len(seen) != len(st.arcs):
            continue
        for i in range(len(seen)):
            if tuple(seen[i:] + seen[:i]) == tuple(st.arcs):
                return True
    return False


def _grand_tour(st, path_of, support):
    start = min(support)
    tour = []
    e = start
    covered = set()
    while True:
        steps = path_of[e]
        tour.extend(steps)
        covered.add(e)
        end = steps[-1][2][1]
        covered.add(end)
        nxt = st.l2.get(end)
        if nxt is None:
            return None
        if nxt == start:
            break
        if nxt in covered:
            return None
        e = nxt
    if covered != set(support):
        return None
    return tour


def system_value(st: DiscState) -> Counter:
    """Length spectrum of a state's walk systems, in parent-graph edges."""
    out: Counter = Counter()
    for f in enumerate_walk_systems(st):
        out[sum(st.dmult[e] for e in f)] += 1
    return out
