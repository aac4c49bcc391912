"""Command-line interface.

Subcommands: gen, construct, verify, solve, table, check-lemmas.  Every
command prints human-readable text by default and a structured run report
with ``--json``.  Exit codes: 0 success, 2 usage, 3 domain error, 4 resource
limit, 5 verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .domination import (
    construct_optimal_tds,
    gamma_t_formula,
    is_dominating,
    is_total_dominating,
    side_lower_bound,
)
from .errors import DomainError, ResourceLimitError
from .graph import KnodelGraph
from .serialize import format_vertex_set, parse_vertex_set, write_graph
from .solver import (
    PRUNED_MAX_N,
    STRATEGY_PRUNED,
    STRATEGY_PURE,
    SolveOptions,
    solve_min_dominating,
    solve_min_total_dominating,
)
from .structure import DEFAULT_SAMPLES, DEFAULT_SEED, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4
EXIT_VERIFICATION = 5


def _report(command: str, parameters: dict[str, Any], result: dict[str, Any]) -> dict[str, Any]:
    return {
        "command": command,
        "parameters": parameters,
        "result": result,
        "version": __version__,
    }


def _emit(args: argparse.Namespace, report: dict[str, Any], text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2))
    elif text:
        print(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    g = KnodelGraph(args.delta, args.n)
    payload = write_graph(g, args.format)
    if args.output:
        try:
            with open(args.output, "w") as handle:
                handle.write(payload)
        except OSError as exc:
            raise DomainError(f"cannot write {args.output}: {exc}")
        print(f"wrote {g} as {args.format} to {args.output}")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    tds = construct_optimal_tds(args.n)
    gamma = gamma_t_formula(args.n)
    check = is_total_dominating(KnodelGraph(3, args.n), tds)
    verified = check.holds and len(tds) == gamma
    result = {
        "n": args.n,
        "gamma_t": gamma,
        "lower_bound": 2 * side_lower_bound(args.n),
        "size": len(tds),
        "verified": verified,
        "set": [str(w) for w in sorted(tds)],
    }
    text = (
        f"W(3,{args.n}): gamma_t={gamma} size={len(tds)} verified={verified}\n"
        f"set: {format_vertex_set(tds)}"
    )
    _emit(args, _report("construct", {"n": args.n}, result), text)
    return EXIT_OK if verified else EXIT_VERIFICATION


def _cmd_verify(args: argparse.Namespace) -> int:
    g = KnodelGraph(args.delta, args.n)
    vertex_set = parse_vertex_set(args.set)
    checker = is_dominating if args.kind == "dominating" else is_total_dominating
    report = checker(g, vertex_set)
    result = {
        "graph": str(g),
        "kind": report.kind,
        "set": [str(w) for w in sorted(vertex_set)],
        "holds": report.holds,
        "uncovered": [str(w) for w in report.uncovered],
    }
    if report.holds:
        text = f"{report.kind} check on {g}: pass"
    else:
        text = (
            f"{report.kind} check on {g}: FAIL\n"
            f"uncovered: {format_vertex_set(report.uncovered)}"
        )
    params = {"delta": args.delta, "n": args.n, "set": args.set, "kind": args.kind}
    _emit(args, _report("verify", params, result), text)
    return EXIT_OK if report.holds else EXIT_VERIFICATION


def _solve_result_dict(res) -> dict[str, Any]:
    # reports carry exact integers only; durations are whole milliseconds
    return {
        "optimum": res.optimum,
        "witness": [str(w) for w in res.witness],
        "certificate": res.certificate,
        "nodes_explored": res.nodes_explored,
        "elapsed_ms": int(res.elapsed * 1000),
    }


def _cmd_solve(args: argparse.Namespace) -> int:
    g = KnodelGraph(args.delta, args.n)
    options = SolveOptions(
        strategy=args.strategy,
        tasks=args.tasks,
        max_nodes=args.max_nodes,
        override_guard=args.force,
    )
    solver = solve_min_dominating if args.kind == "dominating" else solve_min_total_dominating
    res = solver(g, options)
    result = _solve_result_dict(res)
    text = (
        f"{args.kind} optimum for {g}: {res.optimum}\n"
        f"witness: {format_vertex_set(res.witness)}\n"
        f"certificate: {res.certificate} nodes: {res.nodes_explored}"
    )
    params = {
        "delta": args.delta,
        "n": args.n,
        "kind": args.kind,
        "strategy": args.strategy,
        "tasks": args.tasks,
        "max_nodes": args.max_nodes,
    }
    _emit(args, _report("solve", params, result), text)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    if args.n_min % 2 or args.n_max % 2 or not 8 <= args.n_min <= args.n_max:
        raise DomainError(
            f"need even bounds with 8 <= n-min <= n-max, got [{args.n_min}, {args.n_max}]"
        )
    rows = []
    all_verified = True
    for n in range(args.n_min, args.n_max + 1, 2):
        g = KnodelGraph(3, n)
        gamma = gamma_t_formula(n)
        tds = construct_optimal_tds(n)
        verified = len(tds) == gamma and is_total_dominating(g, tds).holds
        all_verified = all_verified and verified
        row = {
            "n": n,
            "n_mod_10": n % 10,
            "gamma_t": gamma,
            "twice_side_bound": 2 * side_lower_bound(n),
            "construction_size": len(tds),
            "construction_verified": verified,
        }
        if args.solve and n <= PRUNED_MAX_N:
            row["solver_optimum"] = solve_min_total_dominating(g).optimum
        rows.append(row)
    header = ["n", "mod10", "gamma_t", "2*ceil(n/5)", "|D|", "verified"]
    if args.solve:
        header.append("solved")
    lines = ["  ".join(f"{h:>11}" for h in header)]
    for row in rows:
        cells = [
            row["n"],
            row["n_mod_10"],
            row["gamma_t"],
            row["twice_side_bound"],
            row["construction_size"],
            row["construction_verified"],
        ]
        if args.solve:
            cells.append(row.get("solver_optimum", "-"))
        lines.append("  ".join(f"{str(c):>11}" for c in cells))
    params = {"n_min": args.n_min, "n_max": args.n_max, "solve": args.solve}
    _emit(args, _report("table", params, {"rows": rows}), "\n".join(lines))
    return EXIT_OK if all_verified else EXIT_VERIFICATION


def _cmd_check_lemmas(args: argparse.Namespace) -> int:
    outcomes = run_suite(
        args.n_max,
        delta=args.delta,
        exhaustive=args.exhaustive,
        samples=args.samples,
        seed=args.seed,
    )
    failed = [o for o in outcomes if not o.passed]
    lines = []
    for outcome in outcomes:
        status = "pass" if outcome.passed else "FAIL"
        lines.append(f"{outcome.name}: {status} ({outcome.cases} cases)")
        if outcome.counterexample:
            lines.append(f"  counterexample: {outcome.counterexample}")
    result = {
        "checks": [
            {
                "name": o.name,
                "cases": o.cases,
                "passed": o.passed,
                "counterexample": o.counterexample,
            }
            for o in outcomes
        ],
        "passed": not failed,
    }
    params = {
        "n_max": args.n_max,
        "delta": args.delta,
        "exhaustive": args.exhaustive,
        "samples": args.samples,
        "seed": args.seed,
    }
    _emit(args, _report("check-lemmas", params, result), "\n".join(lines))
    return EXIT_OK if not failed else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knodeldom",
        description="Knödel graph total domination toolkit",
    )
    parser.add_argument("--version", action="version", version=f"knodeldom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="serialize a Knödel graph")
    gen.add_argument("--delta", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--format", choices=("edgelist", "dimacs", "json"), default="edgelist")
    gen.add_argument("--output", "-o", help="write to a file instead of stdout")
    gen.set_defaults(handler=_cmd_gen)

    construct = sub.add_parser("construct", help="build the optimal total dominating set of W(3,n)")
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--json", action="store_true")
    construct.set_defaults(handler=_cmd_construct)

    verify = sub.add_parser("verify", help="check a vertex set for (total) domination")
    verify.add_argument("--delta", type=int, default=3)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--set", required=True, help='comma-separated vertices, e.g. "u1,u2,v1,v2"')
    verify.add_argument("--kind", choices=("total", "dominating"), default="total")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=_cmd_verify)

    solve = sub.add_parser("solve", help="exact minimum (total) dominating set")
    solve.add_argument("--delta", type=int, default=3)
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--kind", choices=("total", "dominating"), default="total")
    solve.add_argument("--strategy", choices=(STRATEGY_PRUNED, STRATEGY_PURE), default=STRATEGY_PRUNED)
    solve.add_argument("--tasks", type=int, default=1)
    solve.add_argument("--max-nodes", type=int, default=None)
    solve.add_argument("--force", action="store_true", help="override the size guard")
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(handler=_cmd_solve)

    table = sub.add_parser("table", help="gamma_t table over a range of even n")
    table.add_argument("--n-min", type=int, required=True)
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--solve", action="store_true", help="add an exact-solver column where guards allow")
    table.add_argument("--json", action="store_true")
    table.set_defaults(handler=_cmd_table)

    lemmas = sub.add_parser("check-lemmas", help="run the structural property suite")
    lemmas.add_argument("--n-max", type=int, required=True)
    lemmas.add_argument("--delta", type=int, default=None)
    lemmas.add_argument("--exhaustive", action="store_true")
    lemmas.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    lemmas.add_argument("--seed", type=int, default=DEFAULT_SEED)
    lemmas.add_argument("--json", action="store_true")
    lemmas.set_defaults(handler=_cmd_check_lemmas)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
