"""Base-constant calibration and benchmark rows."""

from __future__ import annotations

import csv
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from . import bounds
from .engine import count_models
from .generators import gen_kcopies, gen_pnt, gen_random, gen_s6, gen_tight
from .program import Clause, Program, classify
from .suffix_scan import enumerate_general

CSV_HEADER = ["instance", "n", "m", "strategy", "calls", "models", "millis", "bound"]


def two_program_clause_pool(num_atoms: int) -> list[Clause]:
    """Every clause of a stripped definite 2-program over ``num_atoms`` atoms."""
    pool = [Clause(x) for x in range(num_atoms)]
    for x, y in itertools.permutations(range(num_atoms), 2):
        pool.append(Clause(x, frozenset([y])))
        pool.append(Clause(x, frozenset(), frozenset([y])))
    return pool


def all_programs(num_atoms: int, pool: list[Clause]) -> Iterator[Program]:
    atoms = [f"p{i}" for i in range(num_atoms)]
    for mask in range(1 << len(pool)):
        yield Program.build(atoms, [c for i, c in enumerate(pool) if mask >> i & 1])


def calibrate(programs: Iterable[Program], strategy: str) -> tuple[int, int]:
    """Maximum (total calls, terminal calls) over ``programs``."""
    max_calls = max_terminal = 0
    for p in programs:
        _, st = count_models(p, strategy=strategy)
        max_calls = max(max_calls, st.calls)
        max_terminal = max(max_terminal, st.terminal)
    return max_calls, max_terminal


def calibrate_two_program(num_atoms: int = 3) -> tuple[int, int]:
    return calibrate(all_programs(num_atoms, two_program_clause_pool(num_atoms)), "2prog")


@dataclass
class BenchRow:
    instance: str
    n: int
    m: int
    strategy: str
    calls: int
    models: int
    millis: float
    bound: float

    def as_list(self) -> list:
        return [self.instance, self.n, self.m, self.strategy, self.calls, self.models,
                f"{self.millis:.3f}", f"{self.bound:.1f}"]


def predicted_bound(program: Program, strategy: str) -> float:
    """Call-count bound for the strategy on this program, from its stripped atom count."""
    from .preprocess import strip

    stripped = strip(program)
    n = len(stripped.atom_ids())
    if strategy == "2prog":
        return bounds.two_program_bound(n)
    if strategy == "tsplit":
        t = max(classify(stripped).t, 2)
        return bounds.tsplit_bound(n, t)
    if strategy == "suffix-scan":
        return math.comb(n, n // 2) if n else 1
    return bounds.naive_worst_calls(n)


def run_instance(name: str, program: Program, strategy: str) -> BenchRow:
    from .preprocess import strip

    n = len(strip(program).atom_ids())
    start = time.perf_counter()
    if strategy == "suffix-scan":
        res = enumerate_general(program)
        models, calls = len(res.models), res.stats.permutations
    else:
        models, st = count_models(program, strategy=strategy)
        calls = st.calls
    millis = (time.perf_counter() - start) * 1000
    return BenchRow(name, n, program.size, strategy, calls, models, millis,
                    predicted_bound(program, strategy))


def family_instances(family: str, lo: int, hi: int, t: int = 2, seed: int = 0,
                     count: int = 1) -> Iterator[tuple[str, Program]]:
    """Instances of a named family for each size parameter in ``lo..hi``.

    ``pnt``: P(n, t-1), a t-program; ``kcopies``: k copies of P(2t-1, t-1);
    ``s6-copies``: k copies of the six-atom cycle program; ``tight``: the
    2-program on n atoms with the most stable models; ``random``: ``count``
    random t-programs on n atoms with 2n clauses.
    """
    for v in range(lo, hi + 1):
        if family == "pnt":
            if v > t - 1:
                yield f"pnt(n={v},t={t - 1})", gen_pnt(v, t - 1)
        elif family == "kcopies":
            yield f"kcopies(k={v},t={t})", gen_kcopies(gen_pnt(2 * t - 1, t - 1), v)
        elif family == "s6-copies":
            yield f"s6-copies(k={v})", gen_kcopies(gen_s6(), v)
        elif family == "tight":
            if v >= 2:
                yield f"tight(n={v})", gen_tight(v)
        elif family == "random":
            for i in range(count):
                s = seed * 1_000_003 + v * 1009 + i
                yield f"random(n={v},t={t},seed={s})", gen_random(v, t, 2 * v, s)
        else:
            raise ValueError(f"unknown family {family!r}")


def _job(args):
    return run_instance(*args)


def bench(family: str, strategies: list[str], lo: int, hi: int, t: int = 2, seed: int = 0,
          count: int = 1, jobs: int = 1) -> list[BenchRow]:
    work = [(name, p, s) for name, p in family_instances(family, lo, hi, t, seed, count)
            for s in strategies]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_job, work))
    return [run_instance(*w) for w in work]


def write_csv(rows: Iterable[BenchRow], out: TextIO):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.as_list())
