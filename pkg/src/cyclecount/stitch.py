"""Disc stitching: boundary contractions reducing a disc to a closed graph.

A disc state carries one side of a separator together with the two
boundary labellings, the arc constraints, required/forbidden edge sets
and (optionally) length bookkeeping.  Contractions remove the boundary
one step at a time:

* ``single_edge_contract`` removes an unlabelled boundary edge and glues
  the two remaining edges of its face together;
* ``parallel_edge_contract`` collapses the lens formed by an unlabelled
  boundary edge and a parallel mate around a degree-2 vertex;
* ``edge_pair_contract`` glues two adjacent boundary edges paired by the
  far-side labelling.

Each step conserves the number of constrained partial walks up to an
explicitly recorded correction term; degenerate configurations terminate
with an immediate count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .errors import EngineError, ValidationError
from .plane_graph import Arc, PlanarTriangulation, Token, validate_triangulation
from .separator import DiscGraph


@dataclass
class Reduced:
    """A fully stitched disc: a closed triangulation plus constraints.

    Counting walks of length l in the disc is counting cycles of length
    ``l - shift`` in the reduced graph.
    """

    graph: PlanarTriangulation
    arcs: tuple[Arc, ...]
    require: frozenset[int]
    forbid: frozenset[int]
    shift: int


@dataclass
class StitchResult:
    """Immediate contributions plus the reduced subproblems of a stitch."""

    contrib: Counter
    leaves: list[Reduced]


@dataclass
class DiscState:
    """Mutable state of a disc during stitching."""

    vertices: set[int]
    edge_ends: dict[int, tuple[int, int]]
    faces: dict[int, tuple[int, int, int]]
    boundary: list[int]
    l1: dict[int, int | None]
    l2: dict[int, int | None]
    arcs: list[Arc]
    status: dict[int, str | None]  # "X" required, "Y" forbidden, None free
    dmult: dict[int, int]
    shift: int = 0
    track_lengths: bool = False
    trace: Callable[[str], object] | None = None
    edge_faces: dict[int, set[int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.edge_faces:
            ef: dict[int, set[int]] = {e: set() for e in self.edge_ends}
            for fid, fe in self.faces.items():
                for e in fe:
                    ef[e].add(fid)
            self.edge_faces = ef

    def copy(self) -> "DiscState":
        return DiscState(
            vertices=set(self.vertices),
            edge_ends=dict(self.edge_ends),
            faces=dict(self.faces),
            boundary=list(self.boundary),
            l1=dict(self.l1),
            l2=dict(self.l2),
            arcs=list(self.arcs),
            status=dict(self.status),
            dmult=dict(self.dmult),
            shift=self.shift,
            track_lengths=self.track_lengths,
            trace=self.trace,
            edge_faces={e: set(fs) for e, fs in self.edge_faces.items()},
        )

    # -- queries ---------------------------------------------------------

    def interior_face(self, e: int) -> int:
        fs = self.edge_faces[e]
        if len(fs) != 1:
            raise EngineError("boundary edge %d lies on %d faces" % (e, len(fs)))
        return next(iter(fs))

    def other_face(self, e: int, fid: int) -> int | None:
        fs = self.edge_faces[e] - {fid}
        if not fs:
            return None
        if len(fs) > 1:
            raise EngineError("edge %d lies on more than two faces" % e)
        return next(iter(fs))

    @property
    def x_set(self) -> set[int]:
        return {e for e, s in self.status.items() if s == "X"}

    @property
    def y_set(self) -> set[int]:
        return {e for e, s in self.status.items() if s == "Y"}

    def arc_edges(self) -> set[int]:
        return {a.edge for a in self.arcs}

    def log(self, msg: str) -> None:
        if self.trace is not None:
            self.trace(msg)

    # -- mutations -------------------------------------------------------

    def delete_face(self, fid: int) -> None:
        for e in self.faces.pop(fid):
            self.edge_faces[e].discard(fid)

    def delete_edge(self, e: int) -> None:
        del self.edge_ends[e]
        del self.dmult[e]
        self.status.pop(e, None)
        self.edge_faces.pop(e, None)
        if e in self.boundary:
            self.boundary.remove(e)
        self.l1.pop(e, None)
        self.l2.pop(e, None)

    def merge_edges(self, keep: int, gone: int) -> None:
        """Identify two edges, keeping the id of ``keep``."""
        for fid in list(self.edge_faces[gone]):
            fe = self.faces[fid]
            if keep in fe:
                raise EngineError(
                    "merging edges %d and %d would degenerate face %d" % (keep, gone, fid)
                )
            self.faces[fid] = tuple(keep if x == gone else x for x in fe)
            self.edge_faces[keep].add(fid)
        self.dmult[keep] += self.dmult[gone]
        self.arcs = [
            Arc(keep, a.tail, a.head) if a.edge == gone else a for a in self.arcs
        ]
        del self.edge_ends[gone]
        del self.dmult[gone]
        self.status.pop(gone, None)
        self.edge_faces.pop(gone, None)
        if gone in self.boundary:
            self.boundary.remove(gone)
        self.l1.pop(gone, None)
        self.l2.pop(gone, None)

    def identify_vertices(self, a: int, b: int) -> None:
        if a == b:
            return
        keep, gone = (a, b) if a < b else (b, a)
        self.vertices.discard(gone)
        for e, (u, v) in self.edge_ends.items():
            if gone in (u, v):
                self.edge_ends[e] = (
                    keep if u == gone else u,
                    keep if v == gone else v,
                )

    def delete_vertex(self, v: int) -> None:
        self.vertices.discard(v)


def make_disc_state(
    disc: DiscGraph,
    l1: dict[int, int | None],
    l2: dict[int, int | None],
    arcs: tuple[Arc, ...],
    require: frozenset[int],
    forbid: frozenset[int],
    track_lengths: bool = False,
    trace=None,
) -> DiscState:
    """Prepare a disc for stitching.

    Arc endpoints outside the disc's faces are turned into dangling
    tokens for the corresponding boundary edge.
    """
    local_arcs = []
    for a in arcs:
        if a.edge not in disc.edges:
            raise ValidationError("arc over edge %d outside the disc" % a.edge)

        def tok(t: Token, e=a.edge) -> Token:
            if t[0] == "f" and t[1] in disc.faces:
                return t
            return ("d", e)

        local_arcs.append(Arc(a.edge, tok(a.tail), tok(a.head)))
    status: dict[int, str | None] = {}
    for e in disc.edges:
        if e in require:
            status[e] = "X"
        elif e in forbid:
            status[e] = "Y"
        else:
            status[e] = None
    return DiscState(
        vertices=set(disc.vertices),
        edge_ends=dict(disc.edges),
        faces=dict(disc.faces),
        boundary=list(disc.boundary),
        l1={e: l1[e] for e in disc.boundary},
        l2={e: l2[e] for e in disc.boundary},
        arcs=local_arcs,
        status=status,
        dmult={e: 1 for e in disc.edges},
        track_lengths=track_lengths,
        trace=trace,
    )


def _merge_consecutive_through(
    arcs: list[Arc], ea: int, eb: int, via: Token, merged_edge: int
) -> list[Arc] | None:
    """Replace the arcs over ``ea``/``eb`` by a single merged arc.

    The arcs must be cyclically adjacent and form a directed path through
    the ``via`` token.  Returns the new arc list, or None if no such
    pattern exists (in which case no walk can conform).
    """
    n = len(arcs)
    for k in range(n):
        p, q = arcs[k], arcs[(k + 1) % n]
        if {p.edge, q.edge} == {ea, eb} and p.head == via and q.tail == via:
            merged = Arc(merged_edge, p.tail, q.head)
            if (k + 1) % n == 0:
                return [merged] + arcs[1:-1]
            return arcs[:k] + [merged] + arcs[k + 2 :]
    return None


_EMPTY = Counter()


def _prune():
    return ("immediate", Counter())


def stitch_step(st: DiscState):
    """Perform one contraction (or finalization) on the disc state.

    Returns one of::

        ("continue",  corrections)   a contraction was applied
        ("immediate", contributions) the count is now fully determined
        ("reduced",   Reduced(...))  the boundary is gone
        ("branch",    [state, ...])  length mode must split on edge usage

    Corrections and contributions are Counters mapping walk length (in
    parent-graph edges) to a count.
    """
    if not st.boundary:
        return ("reduced", _finalize(st))
    zeros = sorted(e for e in st.boundary if st.l2[e] is None)
    if zeros:
        e = zeros[0]
        par = _parallel_config(st, e)
        if par is not None:
            return parallel_edge_contract(st, e, *par)
        return single_edge_contract(st, e)
    return edge_pair_contract(st, *_choose_pair(st))


def stitch_disc(st: DiscState) -> StitchResult:
    """Run the contraction schedule to completion."""
    contrib: Counter = Counter()
    leaves: list[Reduced] = []
    stack = [st]
    while stack:
        cur = stack.pop()
        while True:
            kind, data = stitch_step(cur)
            if kind == "continue":
                contrib.update(data)
                continue
            if kind == "immediate":
                contrib.update(data)
                break
            if kind == "reduced":
                leaves.append(data)
                break
            if kind == "branch":
                stack.extend(data)
                break
    return StitchResult(contrib=contrib, leaves=leaves)


def _parallel_config(st: DiscState, e: int):
    """Detect the parallel-edge configuration around boundary edge e.

    Returns (face, p, q, mate_face, mate) or None.  The configuration is
    a face {e, p, q} whose edges p, q also share a second face
    {mate, p, q}; the shared vertex of p and q then has degree 2.
    """
    f = st.interior_face(e)
    p, q = [x for x in st.faces[f] if x != e]
    g = st.other_face(p, f)
    if g is None:
        return None
    if q not in st.faces[g]:
        return None
    mate = [x for x in st.faces[g] if x not in (p, q)]
    if len(mate) != 1:
        raise EngineError("degenerate lens at boundary edge %d" % e)
    return (f, p, q, g, mate[0])


def _choose_pair(st: DiscState) -> tuple[int, int]:
    """Smallest adjacent boundary pair matched by the far labelling."""
    n = len(st.boundary)
    best = None
    for i in range(n):
        a, b = st.boundary[i], st.boundary[(i + 1) % n]
        if st.l2[a] == b:
            if best is None or min(a, b) < min(best):
                best = (a, b)
    if best is None:
        raise EngineError("no adjacent matched boundary pair exists")
    return best


def _bigon_conforms(st: DiscState, p: int, q: int) -> bool:
    """Whether the two-edge walk over p, q conforms to the state's arcs.

    Assumes every arc is over p or q.
    """
    arcs = st.arcs
    if len(arcs) <= 1:
        return True
    if len(arcs) != 2 or {arcs[0].edge, arcs[1].edge} != {p, q}:
        return False
    a, b = arcs
    return a.tail == b.head and a.head == b.tail


def _supported(l: dict[int, int | None]) -> bool:
    return any(v is not None for v in l.values())


def single_edge_contract(st: DiscState, e: int):
    """Remove an unlabelled boundary edge and glue its face shut."""
    f = st.interior_face(e)
    p, q = [x for x in st.faces[f] if x != e]
    bset = set(st.boundary)
    if p in bset and q in bset:
        return _terminal_triangle(st, e, p, q, f)
    if st.l1.get(e) is not None:
        raise EngineError("labellings disagree on the support of edge %d" % e)
    if e in st.arc_edges():
        st.log("single %d: arc over unlabelled boundary edge, count 0" % e)
        return _prune()
    if st.status[e] == "X":
        st.log("single %d: required edge deleted, count 0" % e)
        return _prune()

    sp, sq = st.status[p], st.status[q]
    if {sp, sq} == {"X", "Y"}:
        st.log("single %d: conflicting requirements on %d, %d" % (e, p, q))
        return _prune()
    arc_edges = st.arc_edges()
    if st.track_lengths and sp is None and sq is None and (p in arc_edges or q in arc_edges):
        # an arc forces the glued pair to be used; no walk avoids it
        sp = sq = st.status[p] = st.status[q] = "X"
    if st.track_lengths and sp is None and sq is None:
        both_x = st.copy()
        both_x.status[p] = both_x.status[q] = "X"
        both_y = st.copy()
        both_y.status[p] = both_y.status[q] = "Y"
        st.log("single %d: branch on usage of %d, %d" % (e, p, q))
        return ("branch", [both_x, both_y])

    if p in bset:
        m, other = p, q
    elif q in bset:
        m, other = q, p
    else:
        m, other = min(p, q), max(p, q)

    # arc surgery
    fv: Token = ("f", f)
    have_p = p in st.arc_edges()
    have_q = q in st.arc_edges()
    if have_p and have_q:
        new_arcs = _merge_consecutive_through(st.arcs, p, q, fv, m)
        if new_arcs is None:
            st.log("single %d: arcs over %d, %d not joinable, count 0" % (e, p, q))
            return _prune()
        st.arcs = new_arcs
    elif have_p or have_q:
        present, absent = (p, q) if have_p else (q, p)
        far = st.other_face(absent, f)
        far_tok: Token = ("f", far) if far is not None else ("d", m)
        st.arcs = [
            Arc(m, far_tok if a.tail == fv else a.tail, far_tok if a.head == fv else a.head)
            if a.edge == present
            else a
            for a in st.arcs
        ]

    # statuses
    if "X" in (sp, sq):
        new_status = "X"
        if st.track_lengths:
            st.status[p] = st.status[q] = "X"
            st.shift += 1
    elif "Y" in (sp, sq):
        new_status = "Y"
    else:
        new_status = None

    a, b = st.edge_ends[e]
    st.delete_face(f)
    st.delete_edge(e)
    st.merge_edges(m, other)
    st.status[m] = new_status
    st.identify_vertices(a, b)
    st.log("single %d: merged %d+%d -> %d" % (e, p, q, m))
    return ("continue", Counter())


def _terminal_triangle(st: DiscState, e: int, p: int, q: int, f: int):
    """The disc is a single face with boundary {e, p, q}."""
    contrib: Counter = Counter()
    arc_edges = st.arc_edges()
    x = st.x_set
    if not _supported(st.l1):
        if not st.arcs and not x:
            contrib[0] += 1
    else:
        if st.l1.get(p) != q or st.l1.get(q) != p:
            raise EngineError("unexpected labelling on terminal triangle")
        ok = arc_edges <= {p, q} and x <= {p, q}
        ok = ok and st.status[p] != "Y" and st.status[q] != "Y"
        if ok and len(st.arcs) == 2:
            fv: Token = ("f", f)
            ok = (st.arcs[0].head == fv) != (st.arcs[1].head == fv)
        elif ok and len(st.arcs) > 2:
            ok = False
        if ok:
            contrib[st.dmult[p] + st.dmult[q]] += 1
    st.log("terminal triangle at %d: %r" % (e, dict(contrib)))
    return ("immediate", contrib)


def parallel_edge_contract(st: DiscState, e: int, f: int, p: int, q: int, g: int, mate: int):
    """Collapse the lens {e, p, q}/{mate, p, q} around a degree-2 vertex."""
    contrib: Counter = Counter()
    arc_edges = st.arc_edges()
    x = st.x_set

    # the two-edge walk around the lens is itself a valid closed walk;
    # record it before the lens disappears
    bigon_ok = (
        not _supported(st.l1)
        and arc_edges <= {p, q}
        and _bigon_conforms(st, p, q)
        and x <= {p, q}
        and st.status[p] != "Y"
        and st.status[q] != "Y"
    )
    if bigon_ok:
        contrib[st.dmult[p] + st.dmult[q]] += 1

    if mate in st.boundary:
        # the disc is exactly the lens
        if not _supported(st.l1) and not st.arcs and not x:
            contrib[0] += 1
        st.log("terminal lens at %d: %r" % (e, dict(contrib)))
        return ("immediate", contrib)

    touched = {e, mate, p, q}
    if arc_edges & touched or x & touched:
        st.log("lens at %d pinned by constraints: %r" % (e, dict(contrib)))
        return ("immediate", contrib)

    # find the degree-2 vertex between the parallel edges
    c_cands = (set(st.edge_ends[p]) & set(st.edge_ends[q])) - set(st.edge_ends[e])
    if len(c_cands) != 1:
        raise EngineError("cannot locate the lens vertex at edge %d" % e)
    c = c_cands.pop()

    sy = "Y" in (st.status[e], st.status[mate])
    st.delete_face(f)
    st.delete_face(g)
    st.delete_edge(p)
    st.delete_edge(q)
    st.merge_edges(e, mate)
    st.delete_vertex(c)
    st.status[e] = "Y" if (sy or st.track_lengths) else None
    st.log("parallel %d: merged mate %d, removed lens vertex %d" % (e, mate, c))
    return ("continue", contrib)


def edge_pair_contract(st: DiscState, e: int, e2: int):
    """Glue two adjacent boundary edges paired by the far labelling."""
    fe = st.interior_face(e)
    fe2 = st.interior_face(e2)
    if fe == fe2:
        return _terminal_wedge(st, e, e2, fe)

    s1, s2 = st.status[e], st.status[e2]
    if "Y" in (s1, s2):
        st.log("pair %d,%d: forbidden crossing edge, count 0" % (e, e2))
        return _prune()

    arc_edges = st.arc_edges()
    if not (e in arc_edges and e2 in arc_edges):
        raise ValidationError(
            "crossing edges %d, %d are not both covered by arcs" % (e, e2)
        )
    m = min(e, e2)
    other = max(e, e2)
    new_arcs = _merge_pair_arcs(st.arcs, e, e2, m)
    if new_arcs is None:
        st.log("pair %d,%d: arcs not consecutive, count 0" % (e, e2))
        return _prune()
    st.arcs = new_arcs

    # locate the shared vertex
    ends_e, ends_e2 = set(st.edge_ends[e]), set(st.edge_ends[e2])
    if ends_e == ends_e2:
        a = c = None  # the pair is a parallel bigon; nothing to identify
    else:
        common = ends_e & ends_e2
        if len(common) != 1:
            raise EngineError("adjacent pair %d, %d shares %d vertices" % (e, e2, len(common)))
        b = common.pop()
        a = (ends_e - {b}).pop()
        c = (ends_e2 - {b}).pop()

    # the labelling of the near side follows the gluing
    g, h = st.l1.get(e), st.l1.get(e2)
    if g is None or h is None:
        raise EngineError("labellings disagree on the support of pair %d, %d" % (e, e2))
    st.merge_edges(m, other)
    st.boundary.remove(m)
    st.l1.pop(m, None)
    st.l2.pop(m, None)
    if g == e2:
        pass  # e and e2 were mutual partners on both sides
    else:
        st.l1[g] = h
        st.l1[h] = g
    if a is not None:
        st.identify_vertices(a, c)
    st.status[m] = "X" if ("X" in (s1, s2) or st.track_lengths) else None
    if st.track_lengths:
        st.shift += 1
    st.log("pair %d,%d -> %d" % (e, e2, m))
    return ("continue", Counter())


def _merge_pair_arcs(arcs: list[Arc], e: int, e2: int, m: int) -> list[Arc] | None:
    """Join the arcs over a glued pair through their dangling tokens."""
    n = len(arcs)
    for k in range(n):
        p_, q_ = arcs[k], arcs[(k + 1) % n]
        if (
            {p_.edge, q_.edge} == {e, e2}
            and p_.head == ("d", p_.edge)
            and q_.tail == ("d", q_.edge)
        ):
            merged = Arc(m, p_.tail, q_.head)
            if (k + 1) % n == 0:
                return [merged] + arcs[1:-1]
            return arcs[:k] + [merged] + arcs[k + 2 :]
    return None


def _terminal_wedge(st: DiscState, e: int, e2: int, f: int):
    """The glued pair shares its face: the walk is fully determined."""
    contrib: Counter = Counter()
    arc_edges = st.arc_edges()
    ok = (
        arc_edges == {e, e2}
        and len(st.arcs) == 2
        and st.x_set <= {e, e2}
        and st.status[e] != "Y"
        and st.status[e2] != "Y"
    )
    if ok:
        fv: Token = ("f", f)
        ok = (st.arcs[0].head == fv) != (st.arcs[1].head == fv)
    if ok:
        contrib[st.dmult[e] + st.dmult[e2]] += 1
    st.log("terminal wedge %d,%d: %r" % (e, e2, dict(contrib)))
    return ("immediate", contrib)


def _finalize(st: DiscState) -> Reduced:
    if len(st.vertices) < 3:
        raise EngineError(
            "stitching produced a degenerate graph on %d vertices" % len(st.vertices)
        )
    graph = PlanarTriangulation(
        vertices=set(st.vertices),
        edges=dict(st.edge_ends),
        faces=dict(st.faces),
    )
    validate_triangulation(graph)
    for a in st.arcs:
        if a.tail[0] != "f" or a.head[0] != "f":
            raise EngineError("dangling arc token survived stitching: %r" % (a,))
    st.log("reduced to %d vertices, shift %d" % (len(st.vertices), st.shift))
    return Reduced(
        graph=graph,
        arcs=tuple(st.arcs),
        require=frozenset(st.x_set),
        forbid=frozenset(st.y_set),
        shift=st.shift,
    )
