"""Command-line front end.

Subcommands: ``scc`` (component decomposition), ``diameter``, ``trace``
(round-by-round table), ``gen`` (write a random graph as an edge list)
and ``bench`` (experiment harness emitting CSV).  Exit codes: 0 on
success, 2 on input or parameter errors, 3 when an internal correctness
check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .engine import (
    InternalCorrectnessError,
    Mode,
    assemble_partition,
    finite_diameter_from_run,
    render_result,
    run,
    trace_table,
)
from .generators import gen_barabasi_albert, gen_erdos_renyi, gen_watts_strogatz
from .graphs import Digraph, EdgeListError, parse_edge_list, serialize_edge_list
from .oracles import floyd_warshall_diameter

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _read_graph(path: str, base: int) -> Digraph:
    return parse_edge_list(Path(path).read_text(), base=base)


def _mode(args: argparse.Namespace) -> Mode:
    if args.global_rounds:
        return Mode.GLOBAL_ROUNDS
    return Mode(args.mode)


def cmd_scc(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.base)
    if g.n == 0:
        return EXIT_OK
    result = run(g, mode=_mode(args))
    partition = assemble_partition(g, result)
    sys.stdout.write(render_result(result, partition, base=args.base))
    return EXIT_OK


def cmd_diameter(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.base)
    if g.n == 0:
        print(0)
        return EXIT_OK
    result = run(g, mode=_mode(args))
    d = finite_diameter_from_run(result)
    print(d)
    if args.check:
        fw = floyd_warshall_diameter(g)
        if fw != d:
            print(f"check failed: floyd-warshall reports {fw}", file=sys.stderr)
            return EXIT_INTERNAL
        print(f"check ok: floyd-warshall agrees ({fw})")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.base)
    if g.n == 0:
        return EXIT_OK
    result = run(g, mode=_mode(args), trace=True)
    sys.stdout.write(trace_table(result, base=args.base))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "er":
        if args.m is None:
            raise ValueError("er requires --m")
        g = gen_erdos_renyi(args.n, args.m, args.seed)
    elif args.family == "ba":
        if args.m is None:
            raise ValueError("ba requires --m")
        g = gen_barabasi_albert(args.n, args.m, args.seed)
    else:
        g = gen_watts_strogatz(args.n, args.k, args.p, args.seed)
    text = serialize_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.diameter_suite:
        records = bench_mod.diameter_benchmark(args.seed)
        description = "diameter suite: ER/BA/WS at n=25 vs floyd-warshall"
        mode = Mode.PER_NODE_FREEZE
    else:
        if args.family is None:
            raise ValueError("bench requires --family or --diameter-suite")
        mode = _mode(args)
        cfg = bench_mod.ExperimentConfig(
            family=args.family.upper(),
            parameter_set=args.param_set,
            node_sizes=tuple(args.sizes),
            replicates=args.replicates,
            seed=args.seed,
            mode=mode,
        )
        records = bench_mod.run_experiment(cfg)
        description = (
            f"family={cfg.family} parameter_set={cfg.parameter_set} "
            f"sizes={list(cfg.node_sizes)} replicates={cfg.replicates}"
        )
    out = Path(args.out)
    bench_mod.emit_csv(records, out)
    bench_mod.write_manifest(out.with_suffix(".manifest.txt"), description, args.seed, mode)
    print(f"wrote {len(records)} records to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sccd",
        description="Strongly connected components and finite diameter of directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=[m.value for m in Mode],
                       default=Mode.PER_NODE_FREEZE.value, help="engine scheduling variant")
        p.add_argument("--global-rounds", action="store_true",
                       help="shorthand for --mode global-rounds (every node keeps "
                            "updating until all stabilize together)")

    def add_graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="edge-list file")
        p.add_argument("--base", type=int, choices=(0, 1), default=0,
                       help="id base of the input file (also used for output)")
        add_mode_args(p)

    p_scc = sub.add_parser("scc", help="decompose into strongly connected components")
    add_graph_args(p_scc)
    p_scc.set_defaults(func=cmd_scc)

    p_diam = sub.add_parser("diameter", help="finite diameter from the round counts")
    add_graph_args(p_diam)
    p_diam.add_argument("--check", action="store_true",
                        help="cross-check against floyd-warshall")
    p_diam.set_defaults(func=cmd_diameter)

    p_trace = sub.add_parser("trace", help="print the round-by-round state table")
    add_graph_args(p_trace)
    p_trace.set_defaults(func=cmd_trace)

    p_gen = sub.add_parser("gen", help="generate a seeded random graph")
    p_gen.add_argument("family", choices=("er", "ba", "ws"))
    p_gen.add_argument("--n", type=int, required=True, help="number of nodes")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--m", type=int, help="edges (er) / links per new vertex (ba)")
    p_gen.add_argument("--k", type=int, default=bench_mod.WS_LATTICE_K,
                       help="ws lattice neighbors per node")
    p_gen.add_argument("--p", type=float, default=0.2, help="ws rewiring probability")
    p_gen.add_argument("--out", help="output file (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="run the benchmark harness, emit CSV")
    p_bench.add_argument("--family", choices=("er", "ba", "ws"))
    p_bench.add_argument("--param-set", type=int, choices=(1, 2), default=1)
    p_bench.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 300, 400, 500])
    p_bench.add_argument("--replicates", type=int, default=10)
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.add_argument("--diameter-suite", action="store_true",
                         help="25-node diameter comparison against floyd-warshall")
    add_mode_args(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalCorrectnessError as exc:
        print(f"internal correctness violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
