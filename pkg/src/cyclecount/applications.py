"""Applications of the counting engine: constrained counts, length
spectra, partition counting and exact uniform sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .engine import DEFAULT_TAU, count_cycles
from .errors import ValidationError
from .plane_graph import CubicPlanarGraph


def count_constrained(
    graph: CubicPlanarGraph,
    require: frozenset[int] = frozenset(),
    forbid: frozenset[int] = frozenset(),
    **kwargs,
) -> int:
    """Number of (non-empty) simple cycles using all of ``require`` and
    none of ``forbid``."""
    if frozenset(require) & frozenset(forbid):
        raise ValidationError("an edge cannot be both required and forbidden")
    return count_cycles(
        graph, require=frozenset(require), forbid=frozenset(forbid), **kwargs
    ).total


def count_length(graph: CubicPlanarGraph, length: int, **kwargs) -> int:
    """Number of simple cycles with exactly ``length`` edges.

    Length 0 counts the empty cycle, of which there is exactly one.
    """
    if length == 0:
        return 1
    result = count_cycles(graph, by_length=True, **kwargs)
    return result.by_length.get(length, 0)


def count_by_length(graph: CubicPlanarGraph, **kwargs) -> dict[int, int]:
    """The full length spectrum of the non-empty simple cycles."""
    return count_cycles(graph, by_length=True, **kwargs).by_length


def count_partitions_sphere(graph: CubicPlanarGraph, **kwargs) -> int:
    """Partitions of the sphere map into two connected face regions.

    Each partition boundary is a simple cycle and vice versa, so this is
    exactly the number of non-empty simple cycles.
    """
    return count_cycles(graph, **kwargs).total


@dataclass(frozen=True)
class BorderSpec:
    """The border cycle of a bordered map: vertices and edges in cyclic order.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (cyclically).
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def resolve_border(graph: CubicPlanarGraph, vertices: tuple[int, ...]) -> BorderSpec:
    """Resolve a border given as a vertex cycle to a BorderSpec.

    When parallel edges join consecutive border vertices, the smallest
    edge id is chosen.
    """
    if len(vertices) < 3 or len(set(vertices)) != len(vertices):
        raise ValidationError("border must be a simple cycle of >= 3 distinct vertices")
    edges = []
    n = len(vertices)
    for i in range(n):
        u, v = vertices[i], vertices[(i + 1) % n]
        cands = sorted(
            e for e, ends in graph.edges.items() if set(ends) == {u, v}
        )
        if not cands:
            raise ValidationError("no edge joins border vertices %d and %d" % (u, v))
        edges.append(cands[0])
    if len(set(edges)) != len(edges):
        raise ValidationError("border revisits an edge")
    return BorderSpec(vertices=tuple(vertices), edges=tuple(edges))


def count_partitions_bordered(
    graph: CubicPlanarGraph, border: BorderSpec, **kwargs
) -> int:
    """Partitions of a bordered map into two simply connected regions.

    Each partition is determined by its internal boundary path, which
    meets the border cycle at exactly two vertices a, b.  It is counted
    once, by requiring the border path from a to b (in the listed
    direction) and forbidding every edge incident on the remaining border
    vertices.
    """
    verts = border.vertices
    n = len(verts)
    incident: dict[int, set[int]] = {v: set() for v in verts}
    for e, (u, w) in graph.edges.items():
        if u in incident:
            incident[u].add(e)
        if w in incident:
            incident[w].add(e)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            a, b = verts[i], verts[j]
            path = frozenset(border.edges[i:j])
            others = [v for v in verts if v not in (a, b)]
            forbid = frozenset().union(*(incident[v] for v in others)) - path
            total += count_constrained(graph, require=path, forbid=forbid, **kwargs)
    return total


def sample_cycle(
    graph: CubicPlanarGraph,
    rng: random.Random | None = None,
    seed: int | None = None,
    tau: int = DEFAULT_TAU,
    cache: bool = True,
    _memo: dict | None = None,
    **kwargs,
) -> tuple[int, ...]:
    """Draw one simple cycle uniformly at random, as a sorted edge tuple.

    Edges are decided one at a time in ascending id order; each inclusion
    probability is an exact ratio of constrained counts.
    """
    if rng is None:
        rng = random.Random(seed)
    memo = _memo if _memo is not None else {}

    def count(req: frozenset[int], forb: frozenset[int]) -> int:
        key = (req, forb)
        if key not in memo:
            memo[key] = count_constrained(
                graph, require=req, forbid=forb, tau=tau, cache=cache, **kwargs
            )
        return memo[key]

    require: frozenset[int] = frozenset()
    forbid: frozenset[int] = frozenset()
    remaining = count(require, forbid)
    if remaining <= 0:
        raise ValidationError("the graph has no simple cycles to sample")
    for e in sorted(graph.edges):
        with_e = count(require | {e}, forbid)
        if rng.randrange(remaining) < with_e:
            require = require | {e}
            remaining = with_e
        else:
            forbid = forbid | {e}
            remaining = remaining - with_e
        if remaining == 1 and len(require) >= 2:
            # the cycle may already be fully determined; finish the scan
            pass
    if remaining != 1:
        raise ValidationError("sampling did not converge to a unique cycle")
    return tuple(sorted(require))
