import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclecount.errors import GraphFormatError, ValidationError
from cyclecount.plane_graph import (
    canonical_arc_sequence,
    Arc,
    dual,
    parse_cubic,
    reverse_arcs,
    serialize_cubic,
    validate_triangulation,
)
from cyclecount.random_graphs import random_cubic_planar

from helpers import CORPUS, load_graph, load_text


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_parses(name):
    g = load_graph(name)
    assert len(g.vertices) % 2 == 0
    assert 3 * len(g.vertices) == 2 * len(g.edges)
    # Euler relation on the sphere
    assert len(g.vertices) - len(g.edges) + len(g.faces) == 2


def test_petersen_rejected():
    with pytest.raises(ValidationError, match="not spherical"):
        load_graph("petersen")


def test_missing_header():
    with pytest.raises(GraphFormatError, match="header"):
        parse_cubic("vertices 2\n")


def test_loop_rejected():
    text = "cubic-planar v1\nvertices 2\nedge 0 0 0\nedge 1 0 1\nedge 2 0 1\nrot 0 0 1 2\nrot 1 0 1 2\n"
    with pytest.raises(ValidationError, match="loop"):
        parse_cubic(text)


def test_degree_rejected():
    text = "cubic-planar v1\nvertices 2\nedge 0 0 1\nrot 0 0\nrot 1 0\n"
    with pytest.raises(ValidationError, match="3-regular"):
        parse_cubic(text)


def test_serialize_round_trip():
    for name in CORPUS:
        g = load_graph(name)
        g2 = parse_cubic(serialize_cubic(g))
        assert g2.edges == g.edges
        assert g2.rotation == g.rotation


def test_json_format():
    g = load_graph("k4")
    data = {
        "vertices": len(g.vertices),
        "edges": [[e, u, v] for e, (u, v) in sorted(g.edges.items())],
        "rotations": {str(v): list(r) for v, r in g.rotation.items()},
    }
    g2 = parse_cubic(json.dumps(data))
    assert g2.edges == g.edges


def test_theta_dual_is_double_triangle():
    tri = dual(load_graph("theta"))
    assert len(tri.vertices) == 3
    assert len(tri.edges) == 3
    assert len(tri.faces) == 2


def test_cube_dual_is_octahedron():
    tri = dual(load_graph("cube"))
    assert len(tri.vertices) == 6
    assert len(tri.edges) == 12
    assert len(tri.faces) == 8
    assert all(tri.degree(v) == 4 for v in tri.vertices)


def test_dual_vertex_count_relation():
    # |V(dual)| = |V(H)|/2 + 2 on the sphere
    for name in CORPUS:
        g = load_graph(name)
        tri = dual(g)
        assert len(tri.vertices) == len(g.vertices) // 2 + 2
        validate_triangulation(tri)


@settings(max_examples=25, deadline=None)
@given(n=st.integers(4, 40).map(lambda k: 2 * (k // 2)), seed=st.integers(0, 10**6))
def test_random_duals_validate(n, seed):
    g = random_cubic_planar(max(n, 4), seed=seed)
    validate_triangulation(dual(g))


def test_canonical_arc_sequence_invariance():
    arcs = (
        Arc(0, ("f", 1), ("f", 2)),
        Arc(3, ("f", 2), ("f", 4)),
        Arc(5, ("f", 4), ("f", 1)),
    )
    canon = canonical_arc_sequence(arcs)
    for r in range(3):
        rot = arcs[r:] + arcs[:r]
        assert canonical_arc_sequence(rot) == canon
        assert canonical_arc_sequence(reverse_arcs(rot)) == canon
