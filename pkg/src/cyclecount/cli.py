"""Command line interface.

Exit codes: 0 success, 1 verification mismatch or internal engine
failure, 2 malformed input or invalid arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import applications as apps
from .engine import DEFAULT_TAU, CountResult, count_cycles
from .errors import EngineError, GraphFormatError, ValidationError
from .oracle import CycleFilter, oracle_count, oracle_count_by_length
from .plane_graph import CubicPlanarGraph, parse_cubic, serialize_cubic
from .random_graphs import random_cubic_planar


def _load(path: str) -> CubicPlanarGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cubic(fh.read())


def _id_list(text: str) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from exc


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from exc


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="path to a cubic planar graph file")
    p.add_argument("--json", action="store_true", help="emit JSON (counts as strings)")
    p.add_argument("--tau", type=int, default=DEFAULT_TAU,
                   help="brute-force below this many vertices (default %(default)s)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for the top-level split (default 1)")
    p.add_argument("--no-cache", dest="cache", action="store_false",
                   help="disable memoisation of subproblem counts")
    p.add_argument("--stats", metavar="FILE",
                   help="write per-subproblem statistics as CSV")
    p.add_argument("--separator-stats", metavar="FILE",
                   help="write separator size/balance statistics as CSV")
    p.add_argument("--trace-stitch", action="store_true",
                   help="log boundary-stitching steps to stderr")


def _engine_kwargs(args) -> dict:
    stats = [] if (args.stats or args.separator_stats) else None
    return {
        "tau": args.tau,
        "threads": args.threads,
        "cache": args.cache,
        "stats": stats,
        "trace": (lambda m: print(m, file=sys.stderr)) if args.trace_stitch else None,
    }


def _write_stats(args, kwargs) -> None:
    stats = kwargs.get("stats")
    if stats is None:
        return
    if args.stats:
        with open(args.stats, "w", newline="", encoding="utf-8") as fh:
            w = csv.DictWriter(
                fh, fieldnames=["depth", "n_vertices", "separator_len", "balance"]
            )
            w.writeheader()
            w.writerows(stats)
    if args.separator_stats:
        with open(args.separator_stats, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["n_vertices", "separator_len", "balance"])
            for row in stats:
                w.writerow([row["n_vertices"], row["separator_len"], row["balance"]])


def _emit_count(args, value: int) -> None:
    if args.json:
        print(json.dumps({"count": str(value)}))
    else:
        print(value)


def _cmd_count(args) -> int:
    graph = _load(args.graph)
    kwargs = _engine_kwargs(args)
    result: CountResult = count_cycles(
        graph, include_empty=args.include_empty, by_length=args.by_length, **kwargs
    )
    _write_stats(args, kwargs)
    if args.by_length:
        spectrum = {str(k): str(v) for k, v in sorted(result.by_length.items())}
        if args.json:
            print(json.dumps({"count": str(result.total), "by_length": spectrum}))
        else:
            for k, v in sorted(result.by_length.items()):
                print("%d %d" % (k, v))
            print("total %d" % result.total)
    else:
        _emit_count(args, result.total)
    return 0


def _cmd_length(args) -> int:
    graph = _load(args.graph)
    kwargs = _engine_kwargs(args)
    value = apps.count_length(graph, args.length, **kwargs)
    _write_stats(args, kwargs)
    _emit_count(args, value)
    return 0


def _cmd_constrained(args) -> int:
    graph = _load(args.graph)
    kwargs = _engine_kwargs(args)
    value = apps.count_constrained(
        graph, require=args.require, forbid=args.forbid, **kwargs
    )
    _write_stats(args, kwargs)
    _emit_count(args, value)
    return 0


def _cmd_partitions(args) -> int:
    graph = _load(args.graph)
    kwargs = _engine_kwargs(args)
    if args.border:
        border = apps.resolve_border(graph, args.border)
        value = apps.count_partitions_bordered(graph, border, **kwargs)
    else:
        value = apps.count_partitions_sphere(graph, **kwargs)
    _write_stats(args, kwargs)
    _emit_count(args, value)
    return 0


def _cmd_sample(args) -> int:
    graph = _load(args.graph)
    import random

    rng = random.Random(args.seed)
    memo: dict = {}
    samples = [
        apps.sample_cycle(graph, rng=rng, tau=args.tau, cache=args.cache, _memo=memo)
        for _ in range(args.n)
    ]
    if args.json:
        print(json.dumps([[str(e) for e in s] for s in samples]))
    else:
        for s in samples:
            print(" ".join(str(e) for e in s))
    return 0


def _cmd_oracle(args) -> int:
    graph = _load(args.graph)
    filt = CycleFilter(
        require=args.require, forbid=args.forbid, length=args.length
    )
    value = oracle_count(graph, filt, include_empty=args.include_empty)
    _emit_count(args, value)
    return 0


def _cmd_verify(args) -> int:
    graph = _load(args.graph)
    kwargs = _engine_kwargs(args)
    result = count_cycles(graph, by_length=True, **kwargs)
    _write_stats(args, kwargs)
    expected = {k: v for k, v in oracle_count_by_length(graph).items() if v}
    ok = result.by_length == expected and result.total == sum(expected.values())
    if args.json:
        print(json.dumps({
            "ok": ok,
            "engine": {str(k): str(v) for k, v in sorted(result.by_length.items())},
            "oracle": {str(k): str(v) for k, v in sorted(expected.items())},
        }))
    else:
        print("ok" if ok else "MISMATCH engine=%r oracle=%r"
              % (dict(sorted(result.by_length.items())), dict(sorted(expected.items()))))
    return 0 if ok else 1


def _cmd_separator_stats(args) -> int:
    graph = _load(args.graph)
    kwargs = _engine_kwargs(args)
    if kwargs.get("stats") is None:
        kwargs["stats"] = []
    count_cycles(graph, **kwargs)
    rows = kwargs["stats"]
    _write_stats(args, kwargs)
    if args.json:
        print(json.dumps(rows))
    else:
        print("n_vertices separator_len balance")
        for row in rows:
            print("%d %d %.4f" % (row["n_vertices"], row["separator_len"], row["balance"]))
    return 0


def _cmd_random(args) -> int:
    graph = random_cubic_planar(args.n, seed=args.seed)
    sys.stdout.write(serialize_cubic(graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecount",
        description="Exact simple-cycle counting on 3-regular planar multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count simple cycles")
    _add_common(p)
    p.add_argument("--include-empty", action="store_true",
                   help="include the empty cycle in the count")
    p.add_argument("--by-length", action="store_true",
                   help="report the count for every cycle length")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("length", help="count cycles of one exact length")
    _add_common(p)
    p.add_argument("--l", dest="length", type=int, required=True,
                   help="cycle length (number of edges)")
    p.set_defaults(func=_cmd_length)

    p = sub.add_parser("constrained", help="count cycles through/avoiding edges")
    _add_common(p)
    p.add_argument("--require", type=_id_list, default=frozenset(),
                   help="comma-separated edge ids the cycle must use")
    p.add_argument("--forbid", type=_id_list, default=frozenset(),
                   help="comma-separated edge ids the cycle must avoid")
    p.set_defaults(func=_cmd_constrained)

    p = sub.add_parser("partitions", help="count two-region partitions of the map")
    _add_common(p)
    p.add_argument("--border", type=_int_list, default=None,
                   help="border vertex cycle for a bordered map (comma-separated)")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("sample", help="sample simple cycles uniformly")
    _add_common(p)
    p.add_argument("--n", type=int, default=1, help="number of samples")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("oracle", help="count by brute-force enumeration")
    p.add_argument("graph", help="path to a cubic planar graph file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--include-empty", action="store_true")
    p.add_argument("--l", dest="length", type=int, default=None)
    p.add_argument("--require", type=_id_list, default=frozenset())
    p.add_argument("--forbid", type=_id_list, default=frozenset())
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="compare the engine against the oracle")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "separator-stats",
        help="run a count and report separator sizes and balances",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_separator_stats)

    p = sub.add_parser("random", help="generate a random cubic planar graph")
    p.add_argument("--n", type=int, required=True, help="number of vertices (even)")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    p.set_defaults(func=_cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValidationError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except EngineError as exc:
        print("engine error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
