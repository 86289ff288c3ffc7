"""Boundary labellings, the crossing pattern T, and interleavings.

A labelling pairs up boundary edges (non-crossingly, with respect to the
cyclic boundary order) or leaves them unlabelled (None).  A cycle crossing
the boundary induces one labelling per side: each crossing edge is paired
with the edge through which the cycle re-enters that side.  Compatible
labelling pairs are exactly those whose paired-up crossings stitch into a
single closed curve; that curve's crossing pattern is the arc sequence T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .errors import ValidationError
from .plane_graph import Arc, Token, canonical_arc_sequence, reverse_arcs


@dataclass(frozen=True)
class Labelling:
    """A non-crossing partial pairing of the boundary edges.

    ``order`` is the boundary edge ids in cyclic order; ``pairs`` maps
    every boundary edge to its partner, or to None when unpaired.
    """

    order: tuple[int, ...]
    pairs: Mapping[int, int | None]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e in self.order if self.pairs[e] is not None)

    def __call__(self, e: int) -> int | None:
        return self.pairs[e]

    def is_zero(self) -> bool:
        return not self.support

    def validate(self) -> None:
        pos = {e: i for i, e in enumerate(self.order)}
        if set(self.pairs) != set(self.order):
            raise ValidationError("labelling keys differ from boundary order")
        for e, p in self.pairs.items():
            if p is None:
                continue
            if p == e:
                raise ValidationError("edge %d labelled with itself" % e)
            if p not in pos:
                raise ValidationError("label %d is not a boundary edge" % p)
            if self.pairs[p] != e:
                raise ValidationError("labelling is not mutual at %d" % e)
        # non-crossing: paired position intervals must nest or be disjoint
        m = len(self.order)
        spans = []
        for e, p in self.pairs.items():
            if p and pos[e] < pos[p]:
                spans.append((pos[e], pos[p]))
        for i, (a1, b1) in enumerate(spans):
            for a2, b2 in spans[i + 1 :]:
                inside1 = a1 < a2 < b1
                inside2 = a1 < b2 < b1
                if inside1 != inside2:
                    raise ValidationError(
                        "labelling crosses itself (%d..%d vs %d..%d of %d)"
                        % (a1, b1, a2, b2, m)
                    )


def enumerate_labellings(order: tuple[int, ...]) -> list[Labelling]:
    """All non-crossing partial pairings of the boundary edges.

    The number of results is the Motzkin number of ``len(order)``.
    """
    m = len(order)

    def pairings(lo: int, hi: int) -> Iterator[dict[int, int]]:
        # partial non-crossing matchings of positions lo..hi-1; the dicts
        # contain entries only for paired positions
        if lo >= hi:
            yield {}
            return
        yield from pairings(lo + 1, hi)
        for j in range(lo + 1, hi):
            for inside in pairings(lo + 1, j):
                for outside in pairings(j + 1, hi):
                    yield {lo: j, j: lo, **inside, **outside}

    out = []
    for p in pairings(0, m):
        pairs = {
            order[i]: (order[p[i]] if i in p else None) for i in range(m)
        }
        out.append(Labelling(order=order, pairs=pairs))
    return out


def compatibility_check(l1: Labelling, l2: Labelling) -> bool:
    """Whether two labellings stitch into a single closed crossing curve.

    The supports must coincide, and the walk alternating the two pairings
    from any support edge must cover the whole support.
    """
    if l1.support != l2.support:
        return False
    support = l1.support
    if not support:
        return True
    e = min(support)
    seen = {e}
    while l1(e) not in seen:
        e2 = l1(e)
        e = l2(e2)
        seen.add(e2)
        seen.add(e)
    return seen == support


def build_T(
    l1: Labelling,
    l2: Labelling,
    face_pair: Mapping[int, tuple[Token, Token]],
) -> tuple[Arc, ...]:
    """The crossing pattern of a compatible pair with non-empty support.

    ``face_pair`` maps each boundary edge to its (side-1 face, side-2
    face).  Arcs alternate: the first enters side 1 through the smallest
    support edge, the next leaves side 1 through its l1-partner, and so
    on through the alternating walk.
    """
    support = l1.support
    if not support:
        raise ValidationError("crossing pattern of an empty support")
    start = min(support)
    arcs = []
    cur = start
    entering = True
    while True:
        f1, f2 = face_pair[cur]
        arcs.append(Arc(cur, f2, f1) if entering else Arc(cur, f1, f2))
        nxt = l1(cur) if entering else l2(cur)
        if not entering and nxt == start:
            break
        cur = nxt
        entering = not entering
    if len(arcs) != len(support):
        raise ValidationError("labellings are not compatible")
    return tuple(arcs)


def trace_labelling(
    edge_ends: Mapping[int, tuple],
    path_edges: frozenset[int],
    boundary: frozenset[int],
) -> dict[int, int | None]:
    """The labelling induced on a boundary by a set of paths in a disc.

    ``edge_ends`` gives the disc's dual adjacency (face/dangling tokens),
    ``path_edges`` the edges used by the paths, ``boundary`` the boundary
    edge ids.  Each boundary edge crossed by a path is paired with the
    boundary edge where that path ends; uncrossed edges map to 0.
    """
    labels: dict[int, int] = {}
    adj: dict[Token, list[tuple[int, Token]]] = {}
    for e in path_edges:
        u, v = edge_ends[e]
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    for e in boundary:
        if e not in path_edges:
            labels[e] = None
            continue
        # walk from the dangling vertex of e until another dangling vertex
        cur: Token = ("d", e)
        prev_edge = None
        while True:
            step = [(g, w) for g, w in adj[cur] if g != prev_edge]
            if not step:
                raise ValidationError("path from boundary edge %d dead-ends" % e)
            g, w = step[0]
            if w[0] == "d":
                labels[e] = w[1]
                break
            prev_edge = g
            cur = w
    return labels


def is_valid_interleaving(
    I: tuple[Arc, ...],
    S: tuple[Arc, ...],
    T: tuple[Arc, ...],
    edge_side: Mapping[int, int],
    face_side: Callable[[Token], int],
) -> bool:
    """Definition-level check that I interleaves S and T validly.

    ``edge_side`` maps an edge id to 1 or 2 for interior edges and 0 for
    separator edges; ``face_side`` maps a face token to its side.
    """
    s_edges = {a.edge for a in S}
    t_edges = {a.edge for a in T}
    if {a.edge for a in I} != s_edges | t_edges:
        return False
    if len({a.edge for a in I}) != len(I):
        return False
    restr_s = tuple(a for a in I if a.edge in s_edges)
    restr_t = tuple(a for a in I if a.edge in t_edges)
    if canonical_arc_sequence(restr_s) != canonical_arc_sequence(S):
        return False
    if canonical_arc_sequence(restr_t) != canonical_arc_sequence(T):
        return False
    # every segment of non-T arcs must sit strictly inside the side the
    # crossing curve just entered
    n = len(I)
    t_positions = [i for i, a in enumerate(I) if a.edge in t_edges]
    if not t_positions:
        return not any(edge_side[a.edge] == 0 for a in I) and len(
            {edge_side[a.edge] for a in I}
        ) <= 1
    for k, tp in enumerate(t_positions):
        side = face_side(I[tp].head)
        nxt = t_positions[(k + 1) % len(t_positions)]
        i = (tp + 1) % n
        while i != nxt:
            if edge_side[I[i].edge] != side:
                return False
            i = (i + 1) % n
    return True


def enumerate_interleavings(
    S: tuple[Arc, ...],
    T: tuple[Arc, ...],
    edge_side: Mapping[int, int],
    face_side: Callable[[Token], int],
) -> Iterator[tuple[Arc, ...]]:
    """Yield one representative per class of valid interleavings of S and T.

    Representatives keep the arcs of S exactly as given and start at
    S[0]; with empty S the single class is T itself.  T must be
    non-empty.
    """
    if not S:
        yield tuple(T)
        return
    shared = {a.edge for a in S if edge_side[a.edge] == 0}
    if not shared <= {a.edge for a in T}:
        return
    seen_out: set[tuple[Arc, ...]] = set()
    n_s, n_t = len(S), len(T)
    for tv in (tuple(T), reverse_arcs(T)):
        by_edge = {a.edge: a for a in tv}
        if any(by_edge[a.edge] != a for a in S if a.edge in shared):
            continue
        for r in range(n_t):
            trot = tv[r:] + tv[:r]
            yield from _merge(S, trot, shared, edge_side, face_side, seen_out)


def _merge(S, trot, shared, edge_side, face_side, seen_out):
    n_s, n_t = len(S), len(trot)
    s_edges = {a.edge for a in S}

    def rec(i, j, ctx, acc, lead):
        if i == n_s and j == n_t:
            # the leading run of interior S arcs wraps around to sit after
            # the final T arc; it must match that arc's side
            for a in lead:
                if edge_side[a.edge] != ctx:
                    return
            out = tuple(acc)
            if out not in seen_out:
                seen_out.add(out)
                yield out
            return
        first = not acc
        # advance S (coinciding with T when the arc crosses the separator)
        if i < n_s:
            a = S[i]
            if a.edge in shared:
                if j < n_t and trot[j] == a:
                    yield from rec(i + 1, j + 1, face_side(a.head), acc + [a], lead)
            else:
                side = edge_side[a.edge]
                if ctx is None:
                    yield from rec(i + 1, j, ctx, acc + [a], lead + [a])
                elif side == ctx:
                    yield from rec(i + 1, j, ctx, acc + [a], lead)
        # advance T alone (never a shared arc, and never as first element)
        if j < n_t and not first:
            t = trot[j]
            if t.edge not in s_edges:
                yield from rec(i, j + 1, face_side(t.head), acc + [t], lead)

    yield from rec(0, 0, None, [], [])
