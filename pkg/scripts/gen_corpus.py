#!/usr/bin/env python3
"""Regenerate the example graph files under graphs/.

Simple named graphs get their rotation systems from a networkx planar
embedding; the theta graph (which has parallel edges) is written by hand.
The Petersen graph is non-planar and is included as a negative example:
parsing it must fail the sphericity check.
"""

from __future__ import annotations

import os
import sys

import networkx as nx

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from cyclecount.plane_graph import HEADER, parse_cubic, serialize_cubic
from cyclecount.errors import ValidationError

OUT = os.path.join(os.path.dirname(__file__), "..", "graphs")


def embed_simple(G: nx.Graph) -> str:
    """Serialize a simple cubic planar graph with an embedding from networkx."""
    nodes = sorted(G.nodes)
    relabel = {v: i for i, v in enumerate(nodes)}
    edge_id = {}
    lines = [HEADER, "vertices %d" % len(nodes)]
    for i, (u, v) in enumerate(sorted((min(relabel[a], relabel[b]), max(relabel[a], relabel[b])) for a, b in G.edges)):
        edge_id[(u, v)] = i
        lines.append("edge %d %d %d" % (i, u, v))
    ok, emb = nx.check_planarity(nx.relabel_nodes(G, relabel))
    if not ok:
        raise SystemExit("graph is not planar")
    for v in range(len(nodes)):
        rot = []
        for w in emb.neighbors_cw_order(v):
            rot.append(edge_id[(min(v, w), max(v, w))])
        lines.append("rot %d %s" % (v, " ".join(map(str, rot))))
    return "\n".join(lines) + "\n"


def write(name: str, text: str, expect_valid: bool = True) -> None:
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    try:
        parse_cubic(text)
        valid = True
    except ValidationError as exc:
        valid = False
        detail = exc
    if valid != expect_valid:
        raise SystemExit("%s: expected valid=%s" % (name, expect_valid))
    print("%s: %s" % (name, "ok" if valid else "rejected as expected (%s)" % detail))


THETA = """\
%s
# two vertices joined by three parallel edges
vertices 2
edge 0 0 1
edge 1 0 1
edge 2 0 1
rot 0 0 1 2
rot 1 0 2 1
""" % HEADER


def main() -> None:
    os.makedirs(OUT, exist_ok=True)
    write("theta.g", THETA)
    write("k4.g", embed_simple(nx.complete_graph(4)))
    write("prism3.g", embed_simple(nx.circular_ladder_graph(3)))
    write("cube.g", embed_simple(nx.hypercube_graph(3)))
    write("prism5.g", embed_simple(nx.circular_ladder_graph(5)))
    write("dodecahedron.g", embed_simple(nx.dodecahedral_graph()))

    # Petersen: cubic but not planar; any rotation system fails Euler's check
    P = nx.petersen_graph()
    nodes = sorted(P.nodes)
    lines = [HEADER, "# the Petersen graph is not planar: parsing must fail",
             "vertices %d" % len(nodes)]
    eid = {}
    for i, (u, v) in enumerate(sorted((min(a, b), max(a, b)) for a, b in P.edges)):
        eid[(u, v)] = i
        lines.append("edge %d %d %d" % (i, u, v))
    for v in nodes:
        rot = [eid[(min(v, w), max(v, w))] for w in sorted(P.neighbors(v))]
        lines.append("rot %d %s" % (v, " ".join(map(str, rot))))
    write("petersen.g", "\n".join(lines) + "\n", expect_valid=False)


if __name__ == "__main__":
    main()
