"""Command-line entry point: ``mpemc solve|gen|verify|bench``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bench import bench
from .formats import emit_instance, parse_instance, solution_from_dict, solution_to_dict
from .generate import gen_random
from .instance import trivial_cover
from .khalf import solve_khalf
from .logk import logk_run
from .oracle import DEFAULT_LIMIT, exact_mpemc
from .verify import verify


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    extra: dict = {"algorithm": args.algorithm}
    if args.algorithm == "trivial":
        sol = trivial_cover(inst)
    elif args.algorithm == "khalf":
        sol = solve_khalf(inst)
    elif args.algorithm == "exact":
        sol = exact_mpemc(inst, args.limit)
    else:
        run = logk_run(inst, args.gamma, greedy_only=args.greedy_only)
        sol = run.solution
        extra.update(gamma=str(run.params.gamma), tau=run.tau, rounds=run.rounds)
    print(json.dumps(solution_to_dict(sol, **extra)))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    inst = gen_random(args.seed, args.n, args.p, args.max_cost, args.k, args.max_edges)
    text = emit_instance(inst, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    sol = solution_from_dict(json.loads(_read(args.solution)), inst)
    report = verify(inst, sol)
    print(report.render())
    return 0 if report.ok else 1


def cmd_bench(args: argparse.Namespace) -> int:
    config = json.loads(_read(args.config))
    report = bench(config, jobs=args.jobs)
    text = report.to_jsonl(timing=not args.no_timing)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    failed = [row for row in report.rows if not row.ok]
    print(f"{len(report.rows)} rows, {len(failed)} failed", file=sys.stderr)
    for row in failed:
        print(f"  {row.instance} {row.algorithm}: {'; '.join(row.failures)}", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpemc", description="Minimum-power edge multi-cover solvers")
    parser.add_argument("-v", "--verbose", action="store_true", help="log the log-k iteration trace to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file ('-' for stdin)")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=["trivial", "logk", "khalf", "exact"], default="khalf")
    p.add_argument("--gamma", default="2", help="log-k reduction parameter, > 1 (default 2)")
    p.add_argument("--greedy-only", action="store_true", help="fast budgeted-coverage mode for log-k")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="edge cap for --algorithm exact")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--max-cost", type=int, default=10)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a solution document against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark config")
    p.add_argument("--config", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times (byte-stable output)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
