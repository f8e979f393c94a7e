"""Command-line entry point tying the pipeline together.

Subcommands: build (CSV -> skeleton), graph (skeleton -> search graph),
max-ip / ip / k-ip / atleast-k-ip / two-ip / bounds (solvers on a graph
file), oracle {max-ip,k-ip,ip} (brute force), gen {x3c,xkc,dirhc,
random-dag} (instance generators). Reports are JSON on stdout or --out.

Exit codes: 0 success, 2 input error, 3 parameter error, 4 domain error,
5 size-guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import decomposition, generators, mapper_ingest, oracles, serialization
from .errors import DomainError, InputError, MapperPathsError, ParameterError, SizeError
from .max_ip import max_ip, max_ip_sparse
from .scoring import InterestingPath

_EXIT_CODES = [
    (InputError, 2),
    (ParameterError, 3),
    (DomainError, 4),
    (SizeError, 5),
]


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph_arg(args) -> "serialization.SearchGraph":
    return serialization.load_graph(args.graph)


def _export_dot(args, g, paths) -> None:
    if getattr(args, "export_dot", None):
        serialization.save_dot(g, paths, args.export_dot)


def _solver_report(args, command: dict, g, paths, *, bounds=None, extra=None, t0=None, t_load=None):
    t_solve = time.perf_counter()
    timings = {}
    if t0 is not None and t_load is not None:
        timings = {
            "loadMs": (t_load - t0) * 1000.0,
            "solveMs": (t_solve - t_load) * 1000.0,
        }
    doc = serialization.report_dict(
        g, command, paths, bounds=bounds, timings_ms=timings, extra=extra
    )
    _emit(doc, args.out)
    _export_dot(args, g, paths)


def _cmd_build(args) -> int:
    cloud = serialization.load_point_cloud_csv(
        args.points, args.filter_cols.split(","), args.target_col, args.id_col
    )
    h = cloud.h
    counts = [int(x) for x in args.intervals.split(",")]
    if len(counts) == 1:
        counts = counts * h
    overlaps = [float(x) for x in args.overlap.split(",")]
    if len(overlaps) == 1:
        overlaps = overlaps * h
    cover = mapper_ingest.CoverSpec(tuple(counts), tuple(overlaps))
    if args.gap is not None:
        gap = float(args.gap)
    else:
        targets = [p.target for p in cloud.points]
        span = max(targets) - min(targets)
        gap = span / 20 if span > 0 else 1.0
    sk = mapper_ingest.build_skeleton(cloud, cover, gap)
    serialization.save_skeleton(sk, args.out)
    return 0


def _cmd_graph(args) -> int:
    sk = serialization.load_skeleton(args.skeleton)
    if args.rule == "b" and args.tau is None:
        raise ParameterError("rule 'b' requires --tau")
    g = mapper_ingest.skeleton_to_search_graph(sk, args.rule, args.tau)
    doc = serialization.graph_to_dict(g)
    doc["stats"] = serialization.stats_dict(g)
    _emit(doc, args.out)
    return 0


def _cmd_max_ip(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    solver = max_ip if args.method == "dense" else max_ip_sparse
    path = solver(g)
    paths = [path] if path is not None else []
    _solver_report(
        args, {"command": "max-ip", "method": args.method}, g, paths,
        t0=t0, t_load=t_load,
    )
    return 0


def _cmd_ip(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    coll = decomposition.greedy_ip(g, max_paths=args.max_paths)
    bounds = decomposition.ip_bounds(g)
    _solver_report(
        args, {"command": "ip"}, g, coll.paths,
        bounds=(bounds.lower, bounds.upper), t0=t0, t_load=t_load,
    )
    return 0


def _cmd_k_ip(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    coll = decomposition.greedy_k_ip(g, args.k, max_paths=args.max_paths)
    _solver_report(
        args, {"command": "k-ip", "k": args.k}, g, coll.paths, t0=t0, t_load=t_load
    )
    return 0


def _cmd_atleast_k_ip(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    coll = decomposition.at_least_k_ip(g, args.k, max_paths=args.max_paths)
    _solver_report(
        args, {"command": "atleast-k-ip", "k": args.k}, g, coll.paths,
        t0=t0, t_load=t_load,
    )
    return 0


def _cmd_two_ip(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    coll = decomposition.two_ip(g, matching=args.matching)
    _solver_report(
        args, {"command": "two-ip", "matching": args.matching}, g, coll.paths,
        t0=t0, t_load=t_load,
    )
    return 0


def _cmd_bounds(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    bounds = decomposition.ip_bounds(g)
    _solver_report(
        args, {"command": "bounds"}, g, [],
        bounds=(bounds.lower, bounds.upper), t0=t0, t_load=t_load,
    )
    return 0


def _cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph_arg(args)
    t_load = time.perf_counter()
    if args.problem == "max-ip":
        path = oracles.brute_force_max_ip(g, max_edges=args.max_edges)
        paths: list[InterestingPath] = [path] if path is not None else []
        command = {"command": "oracle max-ip"}
    elif args.problem == "k-ip":
        if args.k is None:
            raise ParameterError("oracle k-ip requires --k")
        coll = oracles.brute_force_k_ip(g, args.k, max_edges=args.max_edges)
        paths = list(coll.paths)
        command = {"command": "oracle k-ip", "k": args.k}
    else:
        coll = oracles.brute_force_ip(g, max_edges=args.max_edges)
        paths = list(coll.paths)
        command = {"command": "oracle ip"}
    _solver_report(args, command, g, paths, t0=t0, t_load=t_load)
    return 0


def _parse_sets(text: str) -> list[tuple[int, ...]]:
    sets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            sets.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError as exc:
            raise InputError(f"cannot parse set {chunk!r}: {exc}") from exc
    if not sets:
        raise InputError("no sets given")
    return sets


def _cmd_gen(args) -> int:
    if args.family == "x3c":
        g = generators.gen_x3c(_parse_sets(args.sets), args.q)
    elif args.family == "xkc":
        g = generators.gen_xkc(args.k, _parse_sets(args.sets), args.q)
    elif args.family == "dirhc":
        if args.cycle is not None:
            edges = generators.directed_cycle(args.cycle)
        elif args.edges is not None:
            edges = []
            for chunk in args.edges.split(","):
                try:
                    u, v = chunk.split("-")
                    edges.append((int(u), int(v)))
                except ValueError as exc:
                    raise InputError(f"cannot parse edge {chunk!r}") from exc
        else:
            raise ParameterError("gen dirhc requires --cycle or --edges")
        g = generators.gen_dir_hc(edges)
    else:
        g = generators.gen_random_dag(
            args.n, args.density, args.signatures,
            (args.weight_min, args.weight_max), args.seed,
        )
    doc = serialization.graph_to_dict(g)
    doc["stats"] = serialization.stats_dict(g)
    _emit(doc, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapperpaths",
        description="Interesting-path mining on directed Mapper skeleton graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a skeleton from a point-cloud CSV")
    p.add_argument("--points", required=True, help="CSV file with a header row")
    p.add_argument("--filter-cols", required=True, help="comma-separated filter columns")
    p.add_argument("--target-col", required=True, help="target (dependent) column")
    p.add_argument("--id-col", default="id")
    p.add_argument("--intervals", default="10", help="per-dimension interval counts")
    p.add_argument("--overlap", default="0.3", help="per-dimension overlap fractions")
    p.add_argument("--gap", default=None, help="single-linkage gap (default: target range / 20)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("graph", help="direct a skeleton into a search graph")
    p.add_argument("--skeleton", required=True)
    p.add_argument("--rule", choices=["a", "b"], default="a")
    p.add_argument("--tau", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_graph)

    def solver_parser(name: str, help_: str, needs_k: bool = False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--graph", required=True)
        if needs_k:
            sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--out", default=None)
        sp.add_argument("--export-dot", default=None)
        return sp

    p = solver_parser("max-ip", "most interesting path (DAG)")
    p.add_argument("--method", choices=["sparse", "dense"], default="sparse")
    p.set_defaults(func=_cmd_max_ip)

    p = solver_parser("ip", "greedy full decomposition (DAG)")
    p.add_argument("--max-paths", type=int, default=None)
    p.set_defaults(func=_cmd_ip)

    p = solver_parser("k-ip", "greedy exactly-k decomposition (DAG)", needs_k=True)
    p.add_argument("--max-paths", type=int, default=None)
    p.set_defaults(func=_cmd_k_ip)

    p = solver_parser("atleast-k-ip", "greedy at-least-k decomposition (DAG)", needs_k=True)
    p.add_argument("--max-paths", type=int, default=None)
    p.set_defaults(func=_cmd_atleast_k_ip)

    p = solver_parser("two-ip", "optimal 2-edge decomposition (matching)")
    p.add_argument("--matching", choices=["blossom", "exhaustive"], default="blossom")
    p.set_defaults(func=_cmd_two_ip)

    p = solver_parser("bounds", "lower/upper bounds for the full decomposition")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("oracle", help="brute-force solvers for small instances")
    p.add_argument("problem", choices=["max-ip", "k-ip", "ip"])
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--export-dot", default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="instance generators")
    p.add_argument("family", choices=["x3c", "xkc", "dirhc", "random-dag"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--sets", default=None, help='e.g. "0,1,2;3,4,5"')
    p.add_argument("--cycle", type=int, default=None, help="dirhc: directed cycle length")
    p.add_argument("--edges", default=None, help='dirhc: edge list "0-1,1-2,..."')
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--signatures", type=int, default=1)
    p.add_argument("--weight-min", type=float, default=0.0)
    p.add_argument("--weight-max", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.max_edges is None:
        args.max_edges = 24 if args.problem == "max-ip" else 12
    if args.command == "gen" and args.family in ("x3c", "xkc") and args.sets is None:
        parser.error(f"gen {args.family} requires --sets")
    try:
        return args.func(args)
    except MapperPathsError as exc:
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                print(f"error: {exc}", file=sys.stderr)
                return code
        raise  # pragma: no cover - all subclasses are mapped


def entry() -> None:
    sys.exit(main())
