# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import sys
import json
import time
import argparse
import logging
from fractions import Fraction
from pathlib import Path
from typing import (Any, Callable, Dict, List, NoReturn, Optional, Sequence, get_args)

from ._experiments import (SUITES, ExperimentConfig, run_experiment)
from ._records import (RunRecord, write_csv, write_json)
from ..core import (Graph, Instance, Solution, decode_edge_list, objective_ordering, parse_edge_list, parse_rational,
                    read_edge_list, write_edge_list)
from ..errors import (GateExhaustedError, InputError, ResourceLimitError, UnsupportedParameterError)
from ..format import fmt_record
from ..generators import (FAMILIES, generate)
from ..output import (configure_logging, smart_print)
from ..solvers import (
    check_general_range,
    check_topdegree_range,
    fptas_general,
    fptas_topdegree,
    greedy_extremal_degree,
    solve_branch_and_bound,
    solve_brute_force,
    solve_one_third
)
from ..subexp import (build_prefix_subproblem, solve_subexponential, tree_decomposition_heuristic)
from ..types import (AlgorithmName, Direction, OutputFormat)


_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_GATE_EXHAUSTED = 3
EXIT_VIOLATION = 4
EXIT_RESOURCE = 5

ALGORITHMS = get_args(AlgorithmName)


class _ArgumentParser(argparse.ArgumentParser):
    r"""
    Usage errors are input errors: exit code `1`, keeping `2` for unsupported parameters.
    """
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        smart_print(f"{self.prog}: error: {message}")
        raise SystemExit(EXIT_INPUT)


def _load_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(decode_edge_list(sys.stdin.buffer.read()))
    return read_edge_list(path)


def _need_epsilon(args: argparse.Namespace) -> Fraction:
    if args.epsilon is None:
        raise InputError(f"--epsilon Is Required For --algo {args.algo}.")
    return parse_rational(args.epsilon, "epsilon")


def _run_algorithm(args: argparse.Namespace, instance: Instance) -> Solution:
    algo = args.algo
    if algo == "brute":
        return solve_brute_force(instance, workers=args.workers).solution
    if algo == "bnb":
        return solve_branch_and_bound(instance).solution
    if algo == "greedy":
        return greedy_extremal_degree(instance)
    if algo == "fptas":
        check_general_range(instance)
        return fptas_general(instance, _need_epsilon(args)).solution
    if algo == "topdeg":
        check_topdegree_range(instance)
        return fptas_topdegree(instance, _need_epsilon(args)).solution
    if algo == "subexp":
        return solve_subexponential(instance, args.width_budget, workers=args.workers).solution
    return solve_one_third(instance)


def cmd_solve(args: argparse.Namespace) -> int:
    r"""
    Solve one instance from an edge-list file and write its :class:`RunRecord`.
    """
    graph = _load_graph(args.file)
    instance = Instance(graph, args.k, args.alpha, args.mode, args.p)
    epsilon = None if args.epsilon is None else parse_rational(args.epsilon, "epsilon")

    start = time.perf_counter()
    solution = _run_algorithm(args, instance)
    wall_ms = (time.perf_counter() - start) * 1000
    oracle = solve_branch_and_bound(instance).value if args.oracle else None

    descriptor = args.file if args.seed is None else f"{args.file}#seed={args.seed}"
    record = RunRecord.from_solution(descriptor, args.algo, instance, solution, epsilon, wall_ms, oracle)
    _LOGGER.info("solve: %s on %r, value %s", solution.provenance, graph, solution.value)

    if args.out == "csv":
        write_csv([record], sys.stdout, timing=args.timing)
    elif args.out == "text":
        text = fmt_record(record.to_dict(args.timing), title="fcgp solve", color=sys.stdout.isatty())
        sys.stdout.write(text + "\n")
    else:
        write_json([record], sys.stdout, timing=args.timing)
    return EXIT_OK


def _family_params(args: argparse.Namespace) -> Dict[str, Any]:
    _, required = FAMILIES[args.family]
    params: Dict[str, Any] = {}
    for name in required:
        value = getattr(args, name)
        if value is None:
            raise InputError(f"--{name} Is Required For --family {args.family}.")
        params[name] = parse_rational(value, name) if name == "mu" else value
    return params


def _default_name(family: str, metadata: Dict[str, Any]) -> str:
    parts = [family]
    parts.extend(f"{key}{value}".replace("/", "_") for key, value in metadata["params"].items())
    if metadata["seed"] is not None:
        parts.append(f"s{metadata['seed']}")
    return "-".join(parts)


def cmd_generate(args: argparse.Namespace) -> int:
    r"""
    Write a generated graph as an edge list plus a JSON metadata sidecar, and print both paths.
    """
    graph, metadata = generate(args.family, _family_params(args), args.seed)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = args.name or _default_name(args.family, metadata)

    graph_path = write_edge_list(graph, out_dir / f"{name}.el")
    meta_path = out_dir / f"{name}.json"
    with open(meta_path, "w", encoding="utf-8", newline="\n") as fp:
        json.dump(metadata, fp, indent=2)
        fp.write("\n")
    sys.stdout.write(f"{graph_path}\n{meta_path}\n")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    r"""
    Run an acceptance sweep and write its records, summary row last. Violations exit with code `4`.
    """
    config = ExperimentConfig(
        suite=args.suite,
        trials=args.trials,
        seed=args.seed,
        max_n=args.max_n,
        max_k=args.max_k,
        epsilons=tuple(parse_rational(e, "epsilon") for e in args.epsilon or ("1/4", "1/2")),
        gap_k=args.k,
        gap_N=args.N,
        mus=tuple(parse_rational(mu, "mu") for mu in args.mu or ("1/10", "1/6")),
        workers=args.workers,
        repro_dir=Path(args.repro_dir)
    )
    report = run_experiment(config)
    if args.out == "json":
        write_json(report.records, sys.stdout, timing=args.timing)
    else:
        write_csv(report.records, sys.stdout, timing=args.timing)

    if report.violations:
        smart_print(f"{args.suite}: {report.violations} guarantee violation(s); instances in {args.repro_dir}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    r"""
    Print the nice tree decomposition of a graph, or of one of its degree prefixes, in the debug format.
    """
    graph = _load_graph(args.file)
    if args.prefix is not None:
        graph = build_prefix_subproblem(graph, objective_ordering(graph, args.mode), args.prefix).prefix_graph
    decomposition = tree_decomposition_heuristic(graph)
    sys.stdout.write(f"# width {decomposition.width} heuristic {decomposition.heuristic}\n")
    sys.stdout.write(decomposition.dump())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    r"""
    The `fcgp` argument parser with its `solve`, `generate`, `experiment` and `decompose` subcommands.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")

    parser = _ArgumentParser(prog="fcgp", description="alpha-fixed cardinality graph partitioning", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    solve = sub.add_parser("solve", parents=[common], help="solve one instance")
    solve.add_argument("file", help="edge-list file, '-' for stdin")
    solve.add_argument("--k", type=int, required=True, help="number of vertices to select")
    solve.add_argument("--alpha", required=True, help="edge weight parameter as a/b")
    solve.add_argument("--mode", choices=get_args(Direction), default="max")
    solve.add_argument("--algo", choices=ALGORITHMS, required=True)
    solve.add_argument("--epsilon", help="accuracy a/b, required for fptas and topdeg")
    solve.add_argument("--width-budget", type=int, default=None, help="largest decomposition width for subexp")
    solve.add_argument("--seed", type=int, default=None, help="recorded in the instance descriptor")
    solve.add_argument("--p", default=None, help="decision threshold a/b; adds the 'accepted' verdict")
    solve.add_argument("--oracle", action="store_true", help="also compute the optimum and the ratio")
    solve.add_argument("--out", choices=get_args(OutputFormat), default="json")
    solve.add_argument("--timing", action="store_true", help="emit wall time (output is then not reproducible)")
    solve.add_argument("--workers", type=int, default=None, help="worker processes (default: FCGP_THREADS)")
    solve.set_defaults(handler=cmd_solve)

    gen = sub.add_parser("generate", parents=[common], help="generate an instance graph")
    gen.add_argument("--family", choices=tuple(FAMILIES), required=True)
    gen.add_argument("--k", type=int, help="gap: clique size")
    gen.add_argument("--N", type=int, help="gap: number of hubs")
    gen.add_argument("--mu", help="gap: alpha = 1/3 - mu, as a/b")
    gen.add_argument("--n", type=int, help="gnm, regular: number of vertices")
    gen.add_argument("--m", type=int, help="gnm: number of edges")
    gen.add_argument("--d", type=int, help="regular: degree")
    gen.add_argument("--rows", type=int, help="grid: rows")
    gen.add_argument("--cols", type=int, help="grid: columns")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out-dir", default=".", help="output directory")
    gen.add_argument("--name", default=None, help="file stem, derived from the parameters by default")
    gen.set_defaults(handler=cmd_generate)

    exp = sub.add_parser("experiment", parents=[common], help="run an acceptance sweep")
    exp.add_argument("--suite", choices=SUITES, required=True)
    exp.add_argument("--trials", type=int, default=50)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--max-n", type=int, default=12)
    exp.add_argument("--max-k", type=int, default=4)
    exp.add_argument("--epsilon", action="append", help="approx: accuracy a/b, repeatable (default 1/4 and 1/2)")
    exp.add_argument("--k", type=int, default=30, help="gap: clique size")
    exp.add_argument("--N", type=int, default=None, help="gap: number of hubs (default k)")
    exp.add_argument("--mu", action="append", help="gap: mu as a/b, repeatable (default 1/10 and 1/6)")
    exp.add_argument("--workers", type=int, default=None, help="worker processes (default: FCGP_THREADS)")
    exp.add_argument("--repro-dir", default=".", help="where violating instances are written")
    exp.add_argument("--out", choices=("csv", "json"), default="csv")
    exp.add_argument("--timing", action="store_true")
    exp.set_defaults(handler=cmd_experiment)

    dec = sub.add_parser("decompose", parents=[common], help="print a nice tree decomposition")
    dec.add_argument("file", help="edge-list file, '-' for stdin")
    dec.add_argument("--prefix", type=int, default=None, help="decompose the first J vertices of the degree order")
    dec.add_argument("--mode", choices=get_args(Direction), default="max")
    dec.set_defaults(handler=cmd_decompose)
    return parser


_EXIT_CODES: List[tuple] = [
    (UnsupportedParameterError, EXIT_UNSUPPORTED),
    (GateExhaustedError, EXIT_GATE_EXHAUSTED),
    (ResourceLimitError, EXIT_RESOURCE),
    (InputError, EXIT_INPUT),
    (OSError, EXIT_INPUT),
]


def main(argv: Optional[Sequence[str]] = None) -> int:
    r"""
    Entry point of the `fcgp` console script.

    Returns
    -------
        int
            `0` success, `1` input or parse error, `2` unsupported parameter, `3` gate exhausted,
            `4` experiment guarantee violation, `5` resource limit exceeded.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except tuple(exc for exc, _ in _EXIT_CODES) as e:
        code = next(code for exc, code in _EXIT_CODES if isinstance(e, exc))
        smart_print(f"fcgp: error: {e}")
        return code
