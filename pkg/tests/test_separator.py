import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclecount.errors import EngineError
from cyclecount.plane_graph import dual
from cyclecount.random_graphs import random_cubic_planar
from cyclecount.separator import find_cycle_separator, split_discs

from helpers import load_graph


def _tri(n, seed):
    return dual(random_cubic_planar(n, seed=seed))


@settings(max_examples=30, deadline=None)
@given(n=st.integers(6, 30).map(lambda k: 2 * k), seed=st.integers(0, 10**6))
def test_separator_contract(n, seed):
    tri = _tri(n, seed)
    m = len(tri.vertices)
    sep = find_cycle_separator(tri)
    # a simple cycle: distinct vertices and edges, aligned (a pair of
    # parallel edges is a valid 2-cycle in a multigraph)
    assert len(set(sep.vertices)) == len(sep.vertices) >= 2
    assert len(set(sep.edge_list)) == len(sep.edge_list)
    k = len(sep.vertices)
    for i in range(k):
        u, v = sep.vertices[i], sep.vertices[(i + 1) % k]
        assert set(tri.edges[sep.edge_list[i]]) == {u, v}
    # hard balance bound on the vertex split
    bound = math.ceil(2 * m / 3)
    assert len(sep.side1_vertices) <= bound
    assert len(sep.side2_vertices) <= bound
    # sides partition the faces and the off-cycle vertices
    assert sep.d1_faces | sep.d2_faces == set(tri.faces)
    assert not sep.d1_faces & sep.d2_faces
    assert min(tri.faces) in sep.d1_faces
    assert sep.side1_vertices | sep.side2_vertices | set(sep.vertices) == tri.vertices


def test_split_discs_partition_edges():
    tri = _tri(24, 5)
    sep = find_cycle_separator(tri)
    d1, d2 = split_discs(tri, sep)
    assert not d1.interior_edges & d2.interior_edges
    assert d1.interior_edges | d2.interior_edges | sep.edge_set == set(tri.edges)
    assert d1.boundary == sep.edge_list == d2.boundary
    for disc in (d1, d2):
        for e in disc.boundary:
            assert e in disc.edges


def test_determinism():
    tri = _tri(20, 11)
    assert find_cycle_separator(tri).edge_list == find_cycle_separator(tri).edge_list


def test_smallest_triangulation():
    # the dual of the theta graph: one triangle, two faces; the whole
    # triangle is the only (trivially balanced) separator
    tri = dual(load_graph("theta"))
    sep = find_cycle_separator(tri)
    assert set(sep.vertices) == tri.vertices
    assert not sep.side1_vertices and not sep.side2_vertices
