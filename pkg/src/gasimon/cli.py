"""Command-line front end.

Exit codes: 0 solved (OneToOne or Masked), 1 usage/input error,
2 PromiseViolated, 3 crosscheck mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .blade import BitString
from .cartan import DEFAULT_CARTAN_LIMIT, matrix_to_multivector, run_pipeline_matrices
from .crosscheck import crosscheck
from .errors import GASimonError
from .function_model import (MaskSpec, OutcomeKind, generate_masked, generate_one_to_one,
                             load_table)
from .multivector import Multivector
from .pipeline import decide, run_pipeline
from .quantum import quantum_solve

EXIT_OK, EXIT_ERROR, EXIT_VIOLATED, EXIT_MISMATCH = 0, 1, 2, 3


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GASIMON_SEED")
    return int(env, 0) if env else 0


def _emit(args, text_lines: list[str], obj) -> None:
    if args.format == "json":
        print(json.dumps(obj))
    else:
        print("\n".join(text_lines))


def cmd_run(args) -> int:
    f = load_table(Path(args.function).read_text(encoding="utf-8"))
    stages = None
    if args.backend == "blade":
        trace = run_pipeline(f)
        outcome = decide(trace.final, f)
        stages = trace.stages()
    elif args.backend == "cartan":
        mt = run_pipeline_matrices(f, args.cartan_limit)
        outcome = decide(mt.final, f)
        width = f.n + f.m
        stages = [("initial", Multivector.scalar(width)),
                  ("after_En", matrix_to_multivector(mt.after_En, width, args.cartan_limit)),
                  ("after_Uf", matrix_to_multivector(mt.after_Uf, width, args.cartan_limit)),
                  ("final", mt.final)]
    else:
        outcome = quantum_solve(f, _seed(args), args.max_rounds)
    obj = outcome.to_json_obj()
    lines = [str(outcome)]
    if args.trace and stages is not None:
        obj["trace"] = {name: mv.to_text() for name, mv in stages}
        lines += [f"{name}: {mv.to_text()}" for name, mv in stages]
    _emit(args, lines, obj)
    return EXIT_VIOLATED if outcome.kind is OutcomeKind.PROMISE_VIOLATED else EXIT_OK


def cmd_generate(args) -> int:
    seed = _seed(args)
    if args.mask is not None:
        f = generate_masked(args.n, args.m, MaskSpec(BitString.parse(args.mask)), seed)
    else:
        f = generate_one_to_one(args.n, args.m, seed)
    if args.format == "json":
        print(f.to_json())
    else:
        sys.stdout.write(f.to_text())
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    results = crosscheck(args.n, args.m, args.trials, _seed(args), args.cartan_limit, args.max_rounds)
    ok = sum(r.ok for r in results)
    failures = [r for r in results if not r.ok]
    lines = [f"{ok}/{len(results)} OK"]
    if failures:
        first = failures[0]
        lines.append(f"first mismatch: {first.instance.source}")
        lines.append(first.instance.f.to_text().rstrip())
        for name, o in first.outcomes.items():
            lines.append(f"  {name}: {o if o is not None else first.error}")
        for blade, b, c in first.diff():
            lines.append(f"  e[{blade}]: blade {b:+d} cartan {c:+d}")
    obj = {
        "n": args.n, "m": args.m, "trials": len(results), "ok": ok,
        "instances": [{
            "source": r.instance.source,
            "values": [str(v) for v in r.instance.f.values],
            "outcome": r.outcomes["blade"].to_json_obj(),
            "final": r.blade_final.to_text(),
            "agree": r.ok,
        } for r in results],
    }
    _emit(args, lines, obj)
    return EXIT_OK if not failures else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                        help="u64 seed (falls back to $GASIMON_SEED, then 0)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cartan-limit", type=int, default=DEFAULT_CARTAN_LIMIT,
                        help="largest n+m for the matrix backend (max 12)")
    common.add_argument("--max-rounds", type=int, default=1000,
                        help="measurement budget for the quantum oracle")

    parser = argparse.ArgumentParser(prog="gasimon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="solve one function table")
    run.add_argument("--function", required=True, help="table file (text or JSON)")
    run.add_argument("--backend", choices=("blade", "cartan", "quantum"), default="blade")
    run.add_argument("--trace", action="store_true", help="print intermediate multivectors")
    run.set_defaults(handler=cmd_run)

    gen = sub.add_parser("generate", parents=[common], help="emit a seeded function table")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--mask", help="hidden mask bits; omit for a 1-to-1 table")
    gen.set_defaults(handler=cmd_generate)

    cc = sub.add_parser("crosscheck", parents=[common], help="compare all backends")
    cc.add_argument("--n", type=int, required=True)
    cc.add_argument("--m", type=int, required=True)
    cc.add_argument("--trials", type=int, default=50)
    cc.set_defaults(handler=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (GASimonError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
