"""Command-line front end: solve | bounds | bench | gen | export-lp.

Exit codes: 0 ok, 2 parse error, 3 connectivity violation, 4 timeout,
5 internal invariant breach.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from .bench import ALGORITHMS, rows_to_csv, run_bench
from .bounds import bounds
from .errors import (
    DisconnectedError,
    GdomsetError,
    GenerationError,
    GraphBuildError,
    InvariantError,
    ParseError,
)
from .exact import bgds, brute_force_gamma_g
from .graph import is_global_dominating
from .heuristics import HEURISTICS, run_heuristic
from .ilp import build_model, export_lp
from .instances import (
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_random,
    gen_rooted_star_family,
    gen_two_star_family,
    parse_auto,
    parse_dimacs,
    parse_edge_list,
    write_edge_list,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONNECTIVITY = 3
EXIT_TIMEOUT = 4
EXIT_INTERNAL = 5

SOLVE_SCHEMA = {
    "type": "object",
    "required": ["algorithm", "instance", "n", "m", "set", "cardinality", "feasible"],
    "properties": {
        "algorithm": {"type": "string"},
        "instance": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "set": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "cardinality": {"type": "integer", "minimum": 0},
        "feasible": {"type": "boolean"},
        "optimal": {"type": "boolean"},
        "purified_from": {"type": ["integer", "null"]},
        "bounds": {
            "type": "object",
            "properties": {
                "L": {"type": "integer"},
                "U": {"type": "integer"},
            },
        },
        "time_ms": {"type": "number"},
    },
    "additionalProperties": False,
}


def _load(path: str, fmt: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc))
    parser = {
        "edgelist": parse_edge_list,
        "dimacs": parse_dimacs,
        "auto": parse_auto,
    }[fmt]
    return parser(text, name=Path(path).name)


def _cmd_solve(args) -> int:
    g, meta = _load(args.input, args.format)
    start = time.perf_counter()
    purified_from = None
    if args.algo in HEURISTICS:
        d, _ = run_heuristic(args.algo, g)
        optimal = False
        if args.purify:
            from .purify import purify

            purified_from = len(d)
            d, _ = purify(g, d)
    elif args.algo == "bgds":
        deadline = time.monotonic() + args.timeout if args.timeout else None
        res = bgds(g, deadline=deadline)
        d, optimal = res.vertices, res.optimal
    else:
        res = brute_force_gamma_g(g)
        d, optimal = res.vertices, res.optimal
    elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
    feasible = is_global_dominating(g, d)
    b = bounds(g)
    if args.json:
        payload = {
            "algorithm": args.algo,
            "instance": meta.name,
            "n": g.n,
            "m": g.m,
            "set": sorted(d.order),
            "cardinality": len(d),
            "feasible": feasible,
            "optimal": optimal,
            "purified_from": purified_from,
            "bounds": {"L": b.L, "U": b.U},
            "time_ms": elapsed_ms,
        }
        print(json.dumps(payload))
    else:
        print(f"instance: {meta.name} (n={g.n}, m={g.m})")
        print(f"algorithm: {args.algo}")
        print(f"set: {sorted(d.order)}")
        print(f"cardinality: {len(d)}")
        if purified_from is not None:
            print(f"purified from: {purified_from}")
        print(f"feasible: {feasible}")
        print(f"optimal: {optimal}")
        print(f"bounds: L={b.L} U={b.U}")
        print(f"time: {elapsed_ms} ms")
    return EXIT_OK if feasible else EXIT_INTERNAL


def _cmd_bounds(args) -> int:
    g, meta = _load(args.input, args.format)
    b = bounds(g)
    if args.json:
        print(json.dumps(b.__dict__))
    else:
        print(f"instance: {meta.name} (n={g.n}, m={g.m})")
        print(
            "lower components: "
            f"degree={b.lb_degree} radius={b.lb_radius} "
            f"diameter={b.lb_diameter} support={b.lb_support}"
        )
        print(f"L={b.L} U1={b.u1} U2={b.u2} U={b.U}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    instances = []
    if args.input:
        root = Path(args.input)
        paths = sorted(root.iterdir()) if root.is_dir() else [root]
        for p in paths:
            if p.is_file():
                instances.append(parse_auto(p.read_text(), name=p.name))
    if args.random:
        for i in range(args.random):
            instances.append(gen_random(args.n, args.density, args.seed + i))
    if not instances:
        raise ParseError("no instances to benchmark")
    algos = args.algos.split(",")
    for a in algos:
        if a not in ALGORITHMS:
            raise ParseError(f"unknown algorithm {a!r}")
    rows, summary = run_bench(
        instances, algos, timeout_s=args.timeout, workers=args.workers
    )
    text = rows_to_csv(rows, summary)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = args.seed
    if args.family == "petersen":
        g = gen_petersen()
    elif args.family == "random":
        g, _ = gen_random(args.n, args.density, seed)
    elif args.family == "two-star":
        g, _ = gen_two_star_family(args.m1, args.m2, args.extra_edges, seed)
    elif args.family == "rooted-star":
        sizes = [int(s) for s in args.star_sizes.split(",")]
        g, _ = gen_rooted_star_family(gen_path(len(sizes)), sizes)
    elif args.family == "path":
        g = gen_path(args.n)
    else:
        g = gen_cycle(args.n)
    text = write_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_export_lp(args) -> int:
    g, meta = _load(args.input, args.format)
    text = export_lp(build_model(g), name=meta.name)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdomset", description="Global dominating set solver toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--input", required=True, help="instance file")
        p.add_argument(
            "--format", choices=("edgelist", "dimacs", "auto"), default="auto"
        )

    p = sub.add_parser("solve", help="run one solver on one instance")
    add_io(p)
    p.add_argument("--algo", required=True, choices=ALGORITHMS)
    p.add_argument("--purify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("bounds", help="print the analytic bounds")
    add_io(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("bench", help="benchmark a directory or random sweep")
    p.add_argument("--input", help="instance file or directory")
    p.add_argument("--random", type=int, default=0, help="number of random instances")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algos", default="h1,h2,h3")
    p.add_argument("--timeout", type=float, default=None, help="seconds per solve")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="CSV output path (stdout when omitted)")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument(
        "family",
        choices=("petersen", "random", "two-star", "rooted-star", "path", "cycle"),
    )
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m1", type=int, default=4)
    p.add_argument("--m2", type=int, default=3)
    p.add_argument("--extra-edges", type=int, default=0)
    p.add_argument("--star-sizes", default="5,4,3", help="comma list, rooted-star")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("export-lp", help="write the 0-1 model in LP format")
    add_io(p)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_export_lp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, GraphBuildError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONNECTIVITY
    except TimeoutError as exc:
        print(f"error: timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (InvariantError, GdomsetError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
