"""Reduct, least model, and the stability check."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .program import Clause, Program

Model = frozenset  # set of atom ids


def reduct(program: Program, model: Iterable[int]) -> Program:
    """Gelfond-Lifschitz reduct of a definite program."""
    model = frozenset(model)
    return program.with_clauses(
        Clause(c.head, c.pos) for c in program.clauses if model.isdisjoint(c.neg)
    )


def _least_model(clauses, model=None) -> set[int]:
    # Work queue over clauses whose positive body is fully derived; each clause
    # enters the queue at most once. With ``model`` given, clauses blocked by
    # it are skipped, i.e. this is the least model of the reduct.
    remaining: dict[int, int] = {}
    watchers: dict[int, list[int]] = {}
    queue: deque[int] = deque()
    for cid, c in enumerate(clauses):
        if model is not None and not model.isdisjoint(c.neg):
            continue
        if not c.pos:
            queue.append(cid)
            continue
        remaining[cid] = len(c.pos)
        for a in c.pos:
            watchers.setdefault(a, []).append(cid)
    lm: set[int] = set()
    while queue:
        head = clauses[queue.popleft()].head
        if head in lm:
            continue
        lm.add(head)
        for cid in watchers.get(head, ()):
            remaining[cid] -= 1
            if remaining[cid] == 0:
                queue.append(cid)
    return lm


def least_model(horn: Program) -> Model:
    for c in horn.clauses:
        if c.neg:
            raise ValueError("least_model expects a Horn program (no negative body literals)")
        if c.head is None:
            raise ValueError("least_model expects definite clauses")
    return frozenset(_least_model(horn.clauses))


def satisfies_constraints(constraints: Iterable[Clause], model: Iterable[int]) -> bool:
    model = model if isinstance(model, (set, frozenset)) else set(model)
    for c in constraints:
        if c.pos <= model and model.isdisjoint(c.neg):
            return False
    return True


def is_stable(program: Program, model: Iterable[int]) -> bool:
    """Stability of ``model``: least model of the reduct of the definite part
    equals ``model`` and no constraint body holds."""
    model = frozenset(model)
    definite = [c for c in program.clauses if c.head is not None]
    if len(definite) != len(program.clauses):
        constraints = [c for c in program.clauses if c.head is None]
        if not satisfies_constraints(constraints, model):
            return False
    return _least_model(definite, model) == model
