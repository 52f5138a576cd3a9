"""Command line: solve, count, check, gen, bench, calibrate.

Exit codes for ``solve``: 10 if at least one model was found, 20 if none,
1 on usage or parse errors. ``check`` exits 0 for a stable model and 20
otherwise.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time

from . import bounds
from .bench import bench, calibrate_two_program, write_csv
from .engine import enumerate_models
from .generators import gen_kcopies, gen_pnt, gen_random, gen_s6, gen_tight
from .preprocess import strip
from .program import ParseError, Program, parse_program, write_program
from .semantics import is_stable
from .strategies import CLI_STRATEGIES, StrategyError, select_strategy
from .suffix_scan import MAX_ATOMS, enumerate_general

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def format_model(program: Program, model) -> str:
    return "{" + " ".join(program.names(model)) + "}"


def run_report(text: str, program: Program, strategy: str, result, wall: float) -> dict:
    n = len(strip(program).atom_ids())
    report = {
        "input_digest": "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest(),
        "strategy": strategy,
        "models": len(result.models),
        "wall_time": round(wall, 6),
        "stats": result.stats.as_dict(),
    }
    if strategy == "suffix-scan":
        calls, bound = result.stats.permutations, (bounds.math.comb(n, n // 2) if n else 1)
    else:
        calls = result.stats.calls
        if strategy == "2prog":
            bound = bounds.two_program_bound(n)
        elif strategy == "tsplit":
            t = max(2, max((c.width for c in strip(program).clauses), default=0))
            bound = bounds.tsplit_bound(n, t)
        else:
            bound = bounds.naive_worst_calls(n)
    report["bound"] = {"n": n, "calls": calls, "bound": round(bound, 3), "within": calls <= bound}
    return report


def cmd_solve(args) -> int:
    text = _read_text(args.file)
    program = parse_program(text)
    strategy = select_strategy(program, args.strategy)
    start = time.perf_counter()
    if strategy == "suffix-scan":
        result = enumerate_general(program, jobs=args.jobs, max_atoms=None if args.force else MAX_ATOMS)
        if args.max_models is not None:
            result.models = result.models[: args.max_models]
    else:
        result = enumerate_models(program, strategy=strategy, max_models=args.max_models)
    wall = time.perf_counter() - start
    out = sys.stdout
    if args.count_only:
        out.write(f"{len(result.models)}\n")
    else:
        for m in result.models:
            out.write(format_model(program, m) + "\n")
    out.flush()
    if args.stats or args.stats_file:
        line = json.dumps(run_report(text, program, strategy, result, wall), sort_keys=True)
        if args.stats_file:
            with open(args.stats_file, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
        else:
            sys.stderr.write(line + "\n")
    return EXIT_SAT if result.models else EXIT_UNSAT


def parse_model_names(text: str) -> list[str]:
    text = re.sub(r"%[^\n]*", "", text)
    return [tok for tok in re.split(r"[\s,{}]+", text) if tok]


def cmd_check(args) -> int:
    program = parse_program(_read_text(args.file))
    names = parse_model_names(_read_text(args.model))
    unknown = [n for n in names if not program.has_atom(n)]
    if unknown:
        raise UsageError(f"unknown atom(s) in model: {', '.join(unknown)}")
    model = frozenset(program.atom_id(n) for n in names)
    if is_stable(program, model):
        print("stable")
        return 0
    print("not stable")
    return EXIT_UNSAT


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "pnt":
        p = gen_pnt(args.n, args.t)
    elif fam == "kcopies":
        if args.base_file:
            base = parse_program(_read_text(args.base_file))
        elif args.base == "s6":
            base = gen_s6()
        else:
            base = gen_pnt(args.n, args.t)
        p = gen_kcopies(base, args.k)
    elif fam == "s6":
        p = gen_s6()
    elif fam == "tight":
        p = gen_tight(args.n)
    else:
        p = gen_random(args.n, args.t, args.clauses if args.clauses is not None else 2 * args.n, args.seed)
    write_program(p, sys.stdout)
    return 0


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        raise argparse.ArgumentTypeError("expected N or A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise argparse.ArgumentTypeError("empty range")
    return lo, hi


def cmd_bench(args) -> int:
    strategies = [s for s in args.strategies.split(",") if s]
    for s in strategies:
        if s not in CLI_STRATEGIES or s == "auto":
            raise UsageError(f"unknown bench strategy {s!r}")
    lo, hi = args.range
    rows = bench(args.family, strategies, lo, hi, t=args.t, seed=args.seed, count=args.count, jobs=args.jobs)
    write_csv(rows, sys.stdout)
    return 0


def cmd_calibrate(args) -> int:
    calls, terminal = calibrate_two_program(args.atoms)
    print(json.dumps({"atoms": args.atoms, "max_calls": calls, "max_terminal": terminal}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="stablemodels", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (("solve", "enumerate stable models"), ("count", "print the number of stable models")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file", help="program file, or - for stdin")
        s.add_argument("--strategy", default="auto", choices=CLI_STRATEGIES)
        s.add_argument("--max-models", type=int, default=None)
        s.add_argument("--stats", action="store_true", help="write a JSON run report to stderr")
        s.add_argument("--stats-file", default=None, help="append the JSON run report to this file")
        if name == "solve":
            s.add_argument("--count-only", action="store_true")
        s.add_argument("--jobs", type=int, default=1, help="worker processes for suffix-scan")
        s.add_argument("--force", action="store_true", help=f"allow suffix-scan beyond {MAX_ATOMS} atoms")
        s.set_defaults(func=cmd_solve, count_only=name == "count")

    c = sub.add_parser("check", help="test whether a set of atoms is a stable model")
    c.add_argument("file")
    c.add_argument("model", help="file listing atom names")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="emit a generated program")
    g.add_argument("family", choices=("pnt", "kcopies", "s6", "tight", "random"))
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--t", type=int, default=1)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--base", choices=("pnt", "s6"), default="pnt", help="kcopies base program")
    g.add_argument("--base-file", default=None, help="kcopies base program file")
    g.add_argument("--clauses", type=int, default=None)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="CSV of call counts against predicted bounds")
    b.add_argument("--family", required=True, choices=("pnt", "kcopies", "s6-copies", "tight", "random"))
    b.add_argument("--range", type=_range, required=True, help="size parameter range A..B")
    b.add_argument("--strategies", default="2prog")
    b.add_argument("--t", type=int, default=2)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--count", type=int, default=1)
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    k = sub.add_parser("calibrate", help="measure the 2prog base constant exhaustively")
    k.add_argument("--atoms", type=int, default=3)
    k.set_defaults(func=cmd_calibrate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
    except (UsageError, StrategyError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
