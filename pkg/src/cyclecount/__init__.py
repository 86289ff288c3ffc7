"""Exact counting and uniform sampling of simple cycles on 3-regular
planar multigraphs."""

from .applications import (
    BorderSpec,
    count_by_length,
    count_constrained,
    count_length,
    count_partitions_bordered,
    count_partitions_sphere,
    resolve_border,
    sample_cycle,
)
from .engine import DEFAULT_TAU, CountResult, count_cycles
from .errors import CycleCountError, EngineError, GraphFormatError, ValidationError
from .oracle import CycleFilter, enumerate_cycles, oracle_count, oracle_count_by_length
from .plane_graph import (
    Arc,
    CubicPlanarGraph,
    PlanarTriangulation,
    dual,
    parse_cubic,
    serialize_cubic,
)
from .random_graphs import random_cubic_planar

__all__ = [
    "Arc",
    "BorderSpec",
    "CountResult",
    "CubicPlanarGraph",
    "CycleCountError",
    "CycleFilter",
    "DEFAULT_TAU",
    "EngineError",
    "GraphFormatError",
    "PlanarTriangulation",
    "ValidationError",
    "count_by_length",
    "count_constrained",
    "count_cycles",
    "count_length",
    "count_partitions_bordered",
    "count_partitions_sphere",
    "dual",
    "enumerate_cycles",
    "oracle_count",
    "oracle_count_by_length",
    "parse_cubic",
    "random_cubic_planar",
    "resolve_border",
    "sample_cycle",
    "serialize_cubic",
]

__version__ = "0.1.0"
