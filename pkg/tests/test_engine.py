import random

import pytest

from cyclecount.engine import count_cycles
from cyclecount.errors import ValidationError
from cyclecount.oracle import CycleFilter, oracle_count, oracle_count_by_length
from cyclecount.random_graphs import random_cubic_planar

from helpers import CORPUS, load_graph


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_matches_oracle(name):
    g = load_graph(name)
    assert count_cycles(g).total == oracle_count(g)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_matches_oracle_low_tau(name):
    # force real recursion through the separator machinery
    g = load_graph(name)
    assert count_cycles(g, tau=4).total == oracle_count(g)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_by_length(name):
    g = load_graph(name)
    got = count_cycles(g, by_length=True, tau=6)
    want = {k: v for k, v in oracle_count_by_length(g).items() if v}
    assert got.by_length == want
    assert got.total == sum(want.values())


def test_include_empty():
    g = load_graph("theta")
    assert count_cycles(g).total == 3
    assert count_cycles(g, include_empty=True).total == 4
    by = count_cycles(g, include_empty=True, by_length=True)
    assert by.by_length[0] == 1


def test_constraints_match_oracle():
    rng = random.Random(2024)
    for _ in range(12):
        n = rng.choice([10, 14, 18, 22])
        g = random_cubic_planar(n, seed=rng.randrange(10**9))
        ids = sorted(g.edges)
        pick = rng.sample(ids, rng.randrange(0, 4))
        req, forb = frozenset(pick[: len(pick) // 2]), frozenset(pick[len(pick) // 2 :])
        got = count_cycles(g, tau=rng.choice([4, 6, 12]), require=req, forbid=forb)
        want = oracle_count(g, CycleFilter(require=req, forbid=forb))
        assert got.total == want


def test_unknown_edge_rejected():
    g = load_graph("k4")
    with pytest.raises(ValidationError):
        count_cycles(g, require=frozenset({999}))


def test_overlapping_constraints_count_zero():
    g = load_graph("k4")
    assert count_cycles(g, require=frozenset({0}), forbid=frozenset({0})).total == 0


def test_cache_and_threads_agree():
    g = random_cubic_planar(26, seed=77)
    base = count_cycles(g, tau=8).total
    assert count_cycles(g, tau=8, cache=True).total == base
    assert count_cycles(g, tau=8, threads=2).total == base


def test_stats_reported():
    stats = []
    g = random_cubic_planar(24, seed=9)
    count_cycles(g, tau=6, stats=stats)
    assert stats
    for row in stats:
        assert row["separator_len"] >= 2
        assert 0 < row["balance"] <= 1


def test_deep_recursion_tau_independent():
    g = random_cubic_planar(22, seed=13)
    totals = {count_cycles(g, tau=tau).total for tau in (4, 5, 6, 8, 12)}
    assert len(totals) == 1
