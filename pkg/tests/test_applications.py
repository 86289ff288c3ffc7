import random
from collections import Counter

import pytest

from cyclecount.applications import (
    BorderSpec,
    count_by_length,
    count_constrained,
    count_length,
    count_partitions_bordered,
    count_partitions_sphere,
    resolve_border,
    sample_cycle,
)
from cyclecount.errors import ValidationError
from cyclecount.oracle import CycleFilter, enumerate_cycles, oracle_count
from cyclecount.random_graphs import random_cubic_planar

from helpers import CORPUS, load_graph


def test_count_length_k4():
    k4 = load_graph("k4")
    assert count_length(k4, 3) == 4
    assert count_length(k4, 4) == 3
    assert count_length(k4, 5) == 0
    assert count_length(k4, 0) == 1
    assert count_length(k4, 1) == 0


def test_spectrum_sums_to_total():
    for name in CORPUS:
        g = load_graph(name)
        spectrum = count_by_length(g)
        assert sum(spectrum.values()) == count_constrained(g)


def test_constrained_overlap_raises():
    with pytest.raises(ValidationError):
        count_constrained(load_graph("k4"), require=frozenset({0}), forbid=frozenset({0}))


def test_constrained_k4_single_edge():
    assert count_constrained(load_graph("k4"), require=frozenset({0})) == 4


def test_partitions_sphere_equals_cycle_count():
    for name in ("theta", "k4", "cube"):
        g = load_graph(name)
        assert count_partitions_sphere(g) == oracle_count(g)


def test_resolve_border_validation():
    k4 = load_graph("k4")
    with pytest.raises(ValidationError):
        resolve_border(k4, (0, 1))
    with pytest.raises(ValidationError):
        resolve_border(k4, (0, 1, 0))


def _bordered_oracle(g, border: BorderSpec) -> int:
    """Count each internal boundary path once via cycle enumeration."""
    verts = border.vertices
    incident = {v: set() for v in verts}
    for e, (u, w) in g.edges.items():
        if u in incident:
            incident[u].add(e)
        if w in incident:
            incident[w].add(e)
    n = len(verts)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            path = frozenset(border.edges[i:j])
            others = [v for v in verts if v not in (verts[i], verts[j])]
            forbid = frozenset().union(*(incident[v] for v in others), frozenset()) - path
            total += oracle_count(g, CycleFilter(require=path, forbid=forbid))
    return total


def test_bordered_k4():
    k4 = load_graph("k4")
    border = resolve_border(k4, (0, 1, 2))
    assert count_partitions_bordered(k4, border) == 4
    assert _bordered_oracle(k4, border) == 4


@pytest.mark.parametrize("name,verts", [("cube", (0, 1, 3, 2)), ("prism3", (0, 1, 2))])
def test_bordered_matches_oracle(name, verts):
    g = load_graph(name)
    border = resolve_border(g, verts)
    assert count_partitions_bordered(g, border) == _bordered_oracle(g, border)


def test_bordered_random():
    g = random_cubic_planar(12, seed=21)
    # find a facial 3-cycle to use as a border
    verts = None
    for cyc in enumerate_cycles(g):
        if len(cyc) == 3:
            ends = [g.edges[e] for e in cyc]
            vs = sorted({v for uv in ends for v in uv})
            if len(vs) == 3:
                verts = tuple(vs)
                break
    assert verts is not None
    try:
        border = resolve_border(g, verts)
    except ValidationError:
        pytest.skip("vertex order did not form a border cycle")
    assert count_partitions_bordered(g, border) == _bordered_oracle(g, border)


def test_sample_is_a_cycle_and_deterministic():
    g = load_graph("cube")
    valid = set(enumerate_cycles(g))
    a = sample_cycle(g, seed=5)
    b = sample_cycle(g, seed=5)
    assert a == b
    assert frozenset(a) in valid


def test_sample_hits_every_cycle_k4():
    k4 = load_graph("k4")
    valid = set(enumerate_cycles(k4))
    rng = random.Random(0)
    memo = {}
    seen = Counter()
    for _ in range(400):
        c = sample_cycle(k4, rng=rng, _memo=memo)
        assert frozenset(c) in valid
        seen[c] += 1
    assert len(seen) == len(valid) == 7
    # roughly uniform: each of the 7 cycles should land near 400/7
    assert all(25 <= v <= 95 for v in seen.values()), dict(seen)
