from collections import Counter

import pytest

from cyclecount.oracle import (
    CycleFilter,
    enumerate_cycles,
    oracle_count,
    oracle_count_by_length,
    simple_cycles,
)
from cyclecount.random_graphs import random_cubic_planar

from helpers import CORPUS, load_graph, subset_cycle_count


def test_known_totals():
    assert oracle_count(load_graph("theta")) == 3
    assert oracle_count(load_graph("k4")) == 7
    assert oracle_count(load_graph("cube")) == 28


def test_include_empty():
    assert oracle_count(load_graph("theta"), include_empty=True) == 4
    only_empty = CycleFilter(forbid=frozenset(load_graph("k4").edges))
    assert oracle_count(load_graph("k4"), only_empty, include_empty=True) == 1


def test_cube_by_length():
    counts = oracle_count_by_length(load_graph("cube"))
    assert dict(counts) == {4: 6, 6: 16, 8: 6}


def test_k4_filters():
    k4 = load_graph("k4")
    assert oracle_count(k4, CycleFilter(length=3)) == 4
    assert oracle_count(k4, CycleFilter(length=5)) == 0
    assert oracle_count(k4, CycleFilter(require=frozenset({0}))) == 4


def test_by_length_sums_to_total():
    for name in CORPUS:
        g = load_graph(name)
        assert sum(oracle_count_by_length(g).values()) == oracle_count(g)


def test_cycles_are_two_regular_connected_and_distinct():
    g = random_cubic_planar(16, seed=99)
    seen = set()
    for cyc in enumerate_cycles(g):
        assert cyc not in seen
        seen.add(cyc)
        deg = Counter()
        for e in cyc:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        assert all(d == 2 for d in deg.values())


@pytest.mark.parametrize("name", ["theta", "k4", "prism3", "cube", "prism5"])
def test_against_subset_counter(name):
    g = load_graph(name)
    assert oracle_count(g) == subset_cycle_count(g.edges)


def test_against_subset_counter_random():
    g = random_cubic_planar(10, seed=4)
    assert oracle_count(g) == subset_cycle_count(g.edges)


def test_parallel_pair_is_a_cycle():
    theta = load_graph("theta")
    cycles = sorted(tuple(sorted(c)) for c in simple_cycles(theta.edges))
    assert cycles == [(0, 1), (0, 2), (1, 2)]
