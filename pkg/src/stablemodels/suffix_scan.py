"""Stable models by scanning suffixes of a minimal full permutation family.

A family of permutations of ``range(n)`` is full when every subset is the
set of the last ``k`` elements of some member. The family built here comes
from the symmetric chain decomposition of the subset lattice: each chain
``C_lo < ... < C_hi`` is padded to a maximal chain and read backwards as a
permutation. Every subset lies on exactly one chain, so it is *owned* by
exactly one permutation (the one whose suffix lengths ``lo..hi`` realize
the chain), and there are ``comb(n, n // 2)`` members.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .engine import EnumerationResult, sort_models
from .preprocess import retained_constraints, strip
from .program import Program
from .semantics import Model, satisfies_constraints

MAX_ATOMS = 28


@dataclass(frozen=True)
class ChainPermutation:
    order: tuple[int, ...]  # order[k] is the element at position k + 1
    lo: int  # shortest owned suffix length
    hi: int  # longest owned suffix length

    def suffix(self, length: int) -> frozenset[int]:
        return frozenset(self.order[len(self.order) - length:])

    def owns(self, length: int) -> bool:
        return self.lo <= length <= self.hi


def _ballot_strings(n: int) -> Iterator[list[int]]:
    # Bit strings with no unmatched 1 when 0 opens and 1 closes: the chain bottoms.
    bits = [0] * n

    def rec(i: int, open_: int):
        if i == n:
            yield bits
            return
        bits[i] = 0
        yield from rec(i + 1, open_ + 1)
        if open_:
            bits[i] = 1
            yield from rec(i + 1, open_ - 1)

    yield from rec(0, 0)


def chain_permutation(bottom: list[int]) -> ChainPermutation:
    n = len(bottom)
    stack: list[int] = []
    partner_zero: list[int] = []  # opening 0 of each matched pair
    ones: list[int] = []
    for i, b in enumerate(bottom):
        if b == 0:
            stack.append(i)
        else:
            partner_zero.append(stack.pop())
            ones.append(i)
    matched = set(partner_zero)
    unmatched = [i for i in range(n) if bottom[i] == 0 and i not in matched]
    # Elements in the order they join the growing set: bottom (ascending),
    # chain steps (left to right), then the matched zeros (descending).
    added = ones + unmatched + sorted(partner_zero, reverse=True)
    p = len(ones)
    return ChainPermutation(tuple(reversed(added)), p, n - p)


class PermutationFamily:
    """Lazily generated minimal full family over ``range(n)``."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("a permutation family needs n >= 1")
        self.n = n

    def __len__(self) -> int:
        return math.comb(self.n, self.n // 2)

    def __iter__(self) -> Iterator[ChainPermutation]:
        for bottom in _ballot_strings(self.n):
            yield chain_permutation(bottom)


def full_family(n: int) -> PermutationFamily:
    return PermutationFamily(n)


@dataclass
class ScanStats:
    permutations: int = 0
    steps: int = 0
    hits: int = 0

    def as_dict(self) -> dict:
        return {"permutations": self.permutations, "steps": self.steps, "hits": self.hits}


class Scanner:
    """Per-program occurrence lists shared by all scans of one program.

    ``program`` must be definite (strip it first).
    """

    def __init__(self, program: Program):
        self.program = program
        clauses = program.clauses
        if any(c.head is None for c in clauses):
            raise ValueError("scan expects a definite program")
        self.heads = [c.head for c in clauses]
        self.pos_len = [len(c.pos) for c in clauses]
        self.neg_len = [len(c.neg) for c in clauses]
        idx = program.index
        self.pos_occ = idx.pos
        self.neg_occ = idx.neg

    def scan(self, order, stats: ScanStats | None = None) -> Model | None:
        """Largest suffix of ``order`` that is a stable model, if any.

        ``order`` must list every atom occurring in the program exactly once.
        Least models of the reducts of successive suffixes are computed
        incrementally with per-clause counters of underived positive body
        atoms and of negative body atoms still in the suffix. The empty
        suffix is tested last.
        """
        steps = 0
        pc = list(self.pos_len)
        nc = list(self.neg_len)
        m = len(pc)
        used = [False] * m
        heads, pos_occ, neg_occ = self.heads, self.pos_occ, self.neg_occ
        num_atoms = self.program.num_atoms
        in_m = [False] * num_atoms
        for a in order:
            in_m[a] = True
        in_lm = [False] * num_atoms
        queue = [cid for cid in range(m) if pc[cid] == 0 and nc[cid] == 0]
        steps += m + len(order)
        size_m = len(order)
        size_lm = 0
        outside = 0  # members of lm not in M
        n = len(order)
        for j in range(n + 1):
            while queue:
                cid = queue.pop()
                used[cid] = True
                steps += 1
                h = heads[cid]
                if in_lm[h]:
                    continue
                in_lm[h] = True
                size_lm += 1
                if not in_m[h]:
                    outside += 1
                for c in pos_occ[h]:
                    steps += 1
                    pc[c] -= 1
                    if pc[c] == 0 and nc[c] == 0 and not used[c]:
                        queue.append(c)
            if outside:
                # lm only grows and M only shrinks from here on.
                break
            if size_lm == size_m:
                if stats is not None:
                    stats.steps += steps
                    stats.hits += 1
                return frozenset(order[j:])
            if j == n:
                break
            x = order[j]
            in_m[x] = False
            size_m -= 1
            if in_lm[x]:
                outside += 1
            for c in neg_occ[x]:
                steps += 1
                nc[c] -= 1
                if nc[c] == 0 and pc[c] == 0 and not used[c]:
                    queue.append(c)
        if stats is not None:
            stats.steps += steps
        return None


def scan(program: Program, order, stats: ScanStats | None = None) -> Model | None:
    return Scanner(program).scan(order, stats)


def _scan_share(args):
    program, universe, worker, jobs = args
    scanner = Scanner(program)
    stats = ScanStats()
    found = []
    for k, perm in enumerate(full_family(len(universe))):
        if k % jobs != worker:
            continue
        stats.permutations += 1
        order = [universe[i] for i in perm.order]
        model = scanner.scan(order, stats)
        if model is not None and perm.owns(len(model)):
            found.append(model)
    return found, stats


def enumerate_general(
    program: Program, jobs: int = 1, max_atoms: int | None = MAX_ATOMS
) -> EnumerationResult:
    """All stable models of an arbitrary program via the permutation family.

    A model is reported only by the permutation owning it, so no model is
    reported twice. Outputs are re-checked against the stripped constraints.
    """
    stripped = strip(program)
    constraints = retained_constraints(program)
    universe = sorted(stripped.atom_ids())
    n = len(universe)
    if max_atoms is not None and n > max_atoms:
        raise ValueError(f"suffix scan refuses {n} atoms (limit {max_atoms}); raise the limit explicitly")
    stats = ScanStats()
    if n == 0:
        found = [frozenset()]
    elif jobs > 1:
        found = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part, st in pool.map(_scan_share, [(stripped, universe, w, jobs) for w in range(jobs)]):
                found.extend(part)
                stats.permutations += st.permutations
                stats.steps += st.steps
                stats.hits += st.hits
    else:
        found, stats = _scan_share((stripped, universe, 0, 1))
    if len(set(found)) != len(found):
        raise AssertionError("a stable model was reported by two permutations")
    models = [m for m in found if satisfies_constraints(constraints, m)]
    return EnumerationResult(sort_models(program, models), stats, "suffix-scan")
