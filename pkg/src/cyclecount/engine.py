"""The divide-and-conquer counting engine.

Cycles of an embedded cubic planar multigraph H correspond to closed
walks in the dual triangulation's adjacency structure.  The engine splits
the triangulation along a balanced cycle separator, sums over compatible
boundary-labelling pairs and interleavings of the crossing pattern with
the inherited arc constraints, stitches each disc shut, and recurses.
Small graphs are counted by brute-force enumeration.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .boundary import (
    Labelling,
    build_T,
    compatibility_check,
    enumerate_interleavings,
    enumerate_labellings,
)
from .errors import ValidationError
from .oracle import cycle_traversal, simple_cycles, steps_conform
from .plane_graph import Arc, CubicPlanarGraph, PlanarTriangulation, dual
from .separator import DiscGraph, SeparatorCycle, find_cycle_separator, split_discs
from .stitch import make_disc_state, stitch_disc

DEFAULT_TAU = 12


@dataclass(frozen=True)
class Subproblem:
    """A triangulation with arc, required-edge and forbidden-edge constraints."""

    graph: PlanarTriangulation
    arcs: tuple[Arc, ...] = ()
    require: frozenset[int] = frozenset()
    forbid: frozenset[int] = frozenset()


@dataclass
class EngineContext:
    """Knobs and instrumentation shared across the recursion."""

    tau: int = DEFAULT_TAU
    by_length: bool = False
    cache: dict | None = None
    stats: list[dict] | None = None
    trace: Callable[[str], object] | None = None
    # memo of enumerated cycles per base-case graph
    cycle_cache: dict = field(default_factory=dict)
    cached_cycles: int = 0
    # interned ids for triangulations, and the split computed for each
    graph_ids: dict = field(default_factory=dict)
    split_cache: dict = field(default_factory=dict)

    def graph_id(self, g: PlanarTriangulation) -> int:
        key = (tuple(sorted(g.edges.items())), tuple(sorted(g.faces.items())))
        gid = self.graph_ids.get(key)
        if gid is None:
            gid = self.graph_ids[key] = len(self.graph_ids)
        return gid

    def zero(self) -> Counter | int:
        return Counter() if self.by_length else 0

    def add(self, a, b):
        if self.by_length:
            out = Counter(a)
            out.update(b)
            return out
        return a + b

    def from_lengths(self, counter: Counter):
        if self.by_length:
            return Counter(counter)
        return sum(counter.values())

    def shifted(self, value, shift: int):
        if self.by_length:
            return Counter({l + shift: c for l, c in value.items()})
        return value

    def combine(self, c1, c2, overlap: int):
        if self.by_length:
            out: Counter = Counter()
            for a, va in c1.items():
                for b, vb in c2.items():
                    out[a + b - overlap] += va * vb
            return out
        return c1 * c2

    def is_zero(self, value) -> bool:
        if self.by_length:
            return not any(value.values())
        return value == 0


@dataclass
class CountResult:
    """Outcome of a top-level count."""

    total: int
    by_length: dict[int, int] | None = None
    stats: list[dict] = field(default_factory=list)


def _cache_key(sub: Subproblem, ctx: "EngineContext"):
    return (ctx.graph_id(sub.graph), sub.arcs, sub.require, sub.forbid)


def brute_force_base(sub: Subproblem, ctx: EngineContext):
    """Count constrained conforming cycles by direct enumeration.

    Works on the dual adjacency of the subproblem's triangulation.  The
    empty cycle is included when no arc or required edge rules it out.
    """
    g = sub.graph
    key = ctx.graph_id(g)
    entry = ctx.cycle_cache.get(key)
    if entry is None:
        ends = g.dual_edge_ends()
        entry = (ends, list(simple_cycles(ends)))
        # bound the memo so long runs cannot exhaust memory
        if ctx.cached_cycles < 2_000_000:
            ctx.cycle_cache[key] = entry
            ctx.cached_cycles += len(entry[1])
    ends, cycles = entry
    lengths: Counter = Counter()
    if not sub.arcs and not sub.require:
        lengths[0] += 1
    arc_edges = {a.edge for a in sub.arcs}
    for cyc in cycles:
        if not sub.require <= cyc or cyc & sub.forbid:
            continue
        if sub.arcs:
            if not arc_edges <= cyc:
                continue
            if not steps_conform(cycle_traversal(cyc, ends), sub.arcs):
                continue
        lengths[len(cyc)] += 1
    return ctx.from_lengths(lengths)


def count_conforming(sub: Subproblem, ctx: EngineContext, depth: int = 0):
    """Count cycles of the subproblem's dual that satisfy all constraints.

    Returns an int, or a Counter over lengths when the context is in
    by-length mode.  The empty cycle is counted (at length 0) iff there
    are no arcs and no required edges.
    """
    if sub.require & sub.forbid:
        return ctx.zero()
    if ctx.cache is not None:
        key = _cache_key(sub, ctx)
        hit = ctx.cache.get(key)
        if hit is not None:
            return Counter(hit) if ctx.by_length else hit
    result = _count_conforming_uncached(sub, ctx, depth)
    # bound the memo so long runs cannot exhaust memory
    if ctx.cache is not None and len(ctx.cache) < 1_000_000:
        ctx.cache[key] = Counter(result) if ctx.by_length else result
    return result


def _split_context(sub: Subproblem, ctx: EngineContext, depth: int):
    """Separator, discs and side-classification for one recursion node."""
    g = sub.graph
    sep = find_cycle_separator(g)
    d1, d2 = split_discs(g, sep)
    ef = g.edge_faces()
    edge_side: dict[int, int] = {}
    for e in g.edges:
        if e in sep.edge_set:
            edge_side[e] = 0
        else:
            edge_side[e] = 1 if ef[e][0] in sep.d1_faces else 2
    face_pair = {}
    for e in sep.edge_list:
        f1, f2 = ef[e]
        if f1 in sep.d1_faces:
            face_pair[e] = (("f", f1), ("f", f2))
        else:
            face_pair[e] = (("f", f2), ("f", f1))

    def face_side(tok) -> int:
        return 1 if tok[1] in sep.d1_faces else 2

    if ctx.stats is not None:
        ctx.stats.append(
            {
                "depth": depth,
                "n_vertices": len(g.vertices),
                "separator_len": len(sep.edge_list),
                "balance": round(sep.balance(len(g.vertices)), 4),
            }
        )
    return sep, d1, d2, edge_side, face_pair, face_side


def _boundary_order(sep: SeparatorCycle) -> tuple[int, ...]:
    """The separator edges in cyclic order, rotated to start at the minimum."""
    edges = sep.edge_list
    i = edges.index(min(edges))
    return tuple(edges[i:] + edges[:i])


def _zero_labelling(order: tuple[int, ...]) -> Labelling:
    return Labelling(order=order, pairs={e: None for e in order})


def _disc_count(
    disc: DiscGraph,
    l_self: Labelling,
    l_other: Labelling,
    arcs: tuple[Arc, ...],
    sub: Subproblem,
    ctx: EngineContext,
    depth: int,
):
    state = make_disc_state(
        disc,
        l1=dict(l_self.pairs),
        l2=dict(l_other.pairs),
        arcs=arcs,
        require=sub.require,
        forbid=sub.forbid,
        track_lengths=ctx.by_length,
        trace=ctx.trace,
    )
    res = stitch_disc(state)
    out = ctx.from_lengths(res.contrib)
    for leaf in res.leaves:
        child = Subproblem(
            graph=leaf.graph,
            arcs=leaf.arcs,
            require=leaf.require,
            forbid=leaf.forbid,
        )
        r = count_conforming(child, ctx, depth + 1)
        out = ctx.add(out, ctx.shifted(r, leaf.shift))
    return out


def _compatible_pairs(order: tuple[int, ...]):
    """All compatible labelling pairs with non-empty support, grouped so
    both labellings of a pair always share the same support."""
    by_support: dict[frozenset[int], list[Labelling]] = {}
    for lab in enumerate_labellings(order):
        by_support.setdefault(lab.support, []).append(lab)
    pairs = []
    for support in sorted(by_support, key=lambda s: tuple(sorted(s))):
        if not support:
            continue
        group = by_support[support]
        for l1 in group:
            for l2 in group:
                if compatibility_check(l1, l2):
                    pairs.append((l1, l2))
    return pairs


def _count_conforming_uncached(sub: Subproblem, ctx: EngineContext, depth: int):
    g = sub.graph
    if len(g.vertices) <= ctx.tau:
        return brute_force_base(sub, ctx)
    gid = ctx.graph_id(g)
    entry = ctx.split_cache.get(gid)
    if entry is None:
        split = _split_context(sub, ctx, depth)
        order = _boundary_order(split[0])
        entry = ctx.split_cache[gid] = (split, order, _compatible_pairs(order))
    split, order, pairs = entry
    sep, d1, d2, edge_side, face_pair, face_side = split
    total = ctx.zero()
    for l1, l2 in pairs:
        total = ctx.add(
            total,
            _pair_term(sub, ctx, depth, d1, d2, edge_side, face_pair, face_side, l1, l2),
        )
    total = ctx.add(
        total, _zero_case(sub, ctx, depth, sep, d1, d2, order)
    )
    return total


def _pair_term(sub, ctx, depth, d1, d2, edge_side, face_pair, face_side, l1, l2):
    T = build_T(l1, l2, face_pair)
    term = ctx.zero()
    for I in enumerate_interleavings(sub.arcs, T, edge_side, face_side):
        s1 = tuple(a for a in I if edge_side[a.edge] != 2)
        s2 = tuple(a for a in I if edge_side[a.edge] != 1)
        c1 = _disc_count(d1, l1, l2, s1, sub, ctx, depth)
        if ctx.is_zero(c1):
            continue
        c2 = _disc_count(d2, l2, l1, s2, sub, ctx, depth)
        if ctx.is_zero(c2):
            continue
        term = ctx.add(term, ctx.combine(c1, c2, len(T)))
    return term


def _zero_case(sub, ctx, depth, sep, d1, d2, order):
    """Contribution of the all-unlabelled pair: cycles avoiding the separator."""
    z = _zero_labelling(order)
    s_edges = {a.edge for a in sub.arcs}
    pinned = s_edges | sub.require
    if not pinned:
        t1 = _disc_count(d1, z, z, (), sub, ctx, depth)
        t2 = _disc_count(d2, z, z, (), sub, ctx, depth)
        total = ctx.add(t1, t2)
        # both sides count the empty cycle; remove the duplicate
        if ctx.by_length:
            total = ctx.add(total, Counter({0: -1}))
        else:
            total -= 1
        return total
    if pinned <= set(d1.edges):
        return _disc_count(d1, z, z, sub.arcs, sub, ctx, depth)
    if pinned <= set(d2.edges):
        return _disc_count(d2, z, z, sub.arcs, sub, ctx, depth)
    return ctx.zero()


def _worker_count(args):
    sub, tau, by_length, lo, hi = args
    ctx = EngineContext(tau=tau, by_length=by_length, cache={})
    sep, d1, d2, edge_side, face_pair, face_side = _split_context(sub, ctx, 0)
    order = _boundary_order(sep)
    pairs = _compatible_pairs(order)[lo:hi]
    total = ctx.zero()
    for l1, l2 in pairs:
        total = ctx.add(
            total,
            _pair_term(sub, ctx, 0, d1, d2, edge_side, face_pair, face_side, l1, l2),
        )
    return dict(total) if by_length else total


def _count_root_parallel(sub: Subproblem, ctx: EngineContext, threads: int):
    sep, d1, d2, edge_side, face_pair, face_side = _split_context(sub, ctx, 0)
    order = _boundary_order(sep)
    pairs = _compatible_pairs(order)
    n = len(pairs)
    chunk = max(1, (n + 4 * threads - 1) // (4 * threads))
    ranges = [(i, min(i + chunk, n)) for i in range(0, n, chunk)]
    total = ctx.zero()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        jobs = [
            pool.submit(_worker_count, (sub, ctx.tau, ctx.by_length, lo, hi))
            for lo, hi in ranges
        ]
        for job in jobs:
            part = job.result()
            part = Counter(part) if ctx.by_length else part
            total = ctx.add(total, part)
    total = ctx.add(total, _zero_case(sub, ctx, 0, sep, d1, d2, order))
    return total


def count_cycles(
    graph: CubicPlanarGraph,
    include_empty: bool = False,
    tau: int = DEFAULT_TAU,
    by_length: bool = False,
    require: frozenset[int] = frozenset(),
    forbid: frozenset[int] = frozenset(),
    threads: int = 1,
    cache: bool = False,
    stats: list[dict] | None = None,
    trace=None,
) -> CountResult:
    """Count simple cycles of an embedded cubic planar multigraph.

    ``require``/``forbid`` constrain the cycles to use/avoid edge sets;
    the empty cycle is excluded unless ``include_empty`` (and only ever
    exists when nothing is required).
    """
    for e in require | forbid:
        if e not in graph.edges:
            raise ValidationError("constraint references unknown edge %d" % e)
    tri = dual(graph)
    sub = Subproblem(
        graph=tri, require=frozenset(require), forbid=frozenset(forbid)
    )
    ctx = EngineContext(
        tau=tau,
        by_length=by_length,
        cache={} if cache else None,
        stats=stats,
        trace=trace,
    )
    if require & forbid:
        value = ctx.zero()
    elif threads > 1 and len(tri.vertices) > tau:
        value = _count_root_parallel(sub, ctx, threads)
    else:
        value = count_conforming(sub, ctx)
    if by_length:
        lengths = {l: c for l, c in sorted(value.items()) if c}
        if not include_empty and not require:
            lengths.pop(0, None)
        total = sum(lengths.values())
        return CountResult(total=total, by_length=lengths, stats=stats or [])
    total = value
    if not include_empty and not require:
        total -= 1
    return CountResult(total=total, by_length=None, stats=stats or [])
