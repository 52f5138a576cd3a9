"""Program generators and the brute-force oracle."""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .program import Clause, Program

BRUTE_FORCE_LIMIT = 25
FACT_RATE = 0.1


def gen_pnt(n: int, t: int) -> Program:
    """All clauses ``x :- not b1, ..., not bt`` over atoms ``a0..a(n-1)``.

    Its stable models are exactly the subsets with ``n - t`` atoms.
    """
    if not 1 <= t < n:
        raise ValueError(f"need 1 <= t < n, got n={n}, t={t}")
    atoms = [f"a{i}" for i in range(n)]
    clauses = []
    for x in range(n):
        others = [b for b in range(n) if b != x]
        for body in itertools.combinations(others, t):
            clauses.append(Clause(x, frozenset(), frozenset(body)))
    return Program.build(atoms, clauses)


def disjoint_union(programs: Sequence[Program]) -> Program:
    """Copies renamed apart: atom ``a`` of copy ``i`` becomes ``a__i``."""
    atoms: list[str] = []
    clauses: list[Clause] = []
    for i, p in enumerate(programs):
        offset = len(atoms)
        atoms.extend(f"{name}__{i}" for name in p.atoms)

        def shift(s):
            return frozenset(a + offset for a in s)

        for c in p.clauses:
            head = None if c.head is None else c.head + offset
            clauses.append(Clause(head, shift(c.pos), shift(c.neg)))
    return Program.build(atoms, clauses)


def gen_kcopies(base: Program, k: int) -> Program:
    if k < 1:
        raise ValueError("k must be at least 1")
    return disjoint_union([base] * k)


def gen_s6() -> Program:
    """Six atoms on a cycle; each atom forces the next two via ``not``."""
    atoms = [f"a{i}" for i in range(6)]
    clauses = []
    for i in range(6):
        clauses.append(Clause((i + 1) % 6, frozenset(), frozenset([i])))
        clauses.append(Clause((i + 2) % 6, frozenset(), frozenset([i])))
    return Program.build(atoms, clauses)


def gen_cycle(n: int) -> Program:
    """``a(i+1) :- not a(i)`` around a cycle of length ``n``."""
    atoms = [f"a{i}" for i in range(n)]
    clauses = [Clause((i + 1) % n, frozenset(), frozenset([i])) for i in range(n)]
    return Program.build(atoms, clauses)


def gen_product(parts: Sequence[int]) -> Program:
    """Disjoint union of ``P(p, 1)`` for each ``p`` in ``parts`` (each ``p >= 2``)."""
    if not parts or any(p < 2 for p in parts):
        raise ValueError("parts must be a nonempty list of integers >= 2")
    return disjoint_union([gen_pnt(p, 1) for p in parts])


def tight_parts(n: int) -> list[int]:
    """Part sizes whose product program on ``n`` atoms has the most stable models among 2-programs."""
    if n < 2:
        raise ValueError("need n >= 2")
    r = n % 3
    if r == 0:
        return [3] * (n // 3)
    if r == 1:
        return [4] + [3] * ((n - 4) // 3)
    return [2] + [3] * ((n - 2) // 3)


def gen_tight(n: int) -> Program:
    return gen_product(tight_parts(n))


def gen_random(n: int, t: int, clause_count: int, seed: int) -> Program:
    """Random definite program with bodies of at most ``t - 1`` literals.

    About one clause in ten is a fact; other body lengths are uniform on
    ``1..t-1``. Heads never occur in their own body, so the output has no
    tautologies or virtual constraints.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    rng = random.Random(seed)
    atoms = [f"x{i}" for i in range(n)]
    clauses = []
    if n == 0:
        return Program.build(atoms, clauses)
    for _ in range(clause_count):
        head = rng.randrange(n)
        k = 0 if n == 1 or rng.random() < FACT_RATE else rng.randint(1, min(t - 1, n - 1))
        body = rng.sample([a for a in range(n) if a != head], k)
        pos, neg = set(), set()
        for a in body:
            (pos if rng.random() < 0.5 else neg).add(a)
        clauses.append(Clause(head, frozenset(pos), frozenset(neg)))
    return Program.build(atoms, clauses)


def _masks(program: Program):
    out = []
    for c in program.clauses:
        pos = sum(1 << a for a in c.pos)
        neg = sum(1 << a for a in c.neg)
        out.append((-1 if c.head is None else 1 << c.head, pos, neg))
    return out


def _stable_mask(clauses, m: int) -> bool:
    # Naive fixpoint over bitmasks: constraints first, then iterate the reduct.
    active = []
    for head, pos, neg in clauses:
        if neg & m:
            continue
        if head == -1:
            if pos & m == pos:
                return False
            continue
        active.append((head, pos))
    lm = 0
    changed = True
    while changed:
        changed = False
        for head, pos in active:
            if not head & lm and pos & lm == pos:
                lm |= head
                changed = True
        if lm & ~m:
            return False
    return lm == m


def brute_force(program: Program) -> list[frozenset[int]]:
    """Every stable model, by testing each subset of the atom table."""
    n = program.num_atoms
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force refuses {n} atoms (limit {BRUTE_FORCE_LIMIT})")
    clauses = _masks(program)
    models = []
    for m in range(1 << n):
        if _stable_mask(clauses, m):
            models.append(frozenset(a for a in range(n) if m >> a & 1))
    return models
