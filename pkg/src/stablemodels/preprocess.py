"""Literal sets, constraint stripping and the simplification [P]_L."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .program import Clause, Literal, Program


@dataclass(frozen=True)
class LiteralSet:
    plus: frozenset[int] = frozenset()
    minus: frozenset[int] = frozenset()

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "LiteralSet":
        plus, minus = set(), set()
        for lit in literals:
            (plus if lit.positive else minus).add(lit.atom)
        return cls(frozenset(plus), frozenset(minus))

    def consistent(self) -> bool:
        return self.plus.isdisjoint(self.minus)

    def zero(self) -> frozenset[int]:
        return self.plus | self.minus

    def literals(self) -> list[Literal]:
        return sorted([Literal(a, True) for a in self.plus] + [Literal(a, False) for a in self.minus])

    def __or__(self, other: "LiteralSet") -> "LiteralSet":
        return LiteralSet(self.plus | other.plus, self.minus | other.minus)

    def __len__(self) -> int:
        return len(self.plus) + len(self.minus)

    def admits(self, model: Iterable[int]) -> bool:
        """True if the atom set ``model`` is consistent with this literal set."""
        model = model if isinstance(model, (set, frozenset)) else set(model)
        return self.plus <= model and self.minus.isdisjoint(model)

    def format(self, program: Program) -> str:
        names = program.atoms
        parts = [names[l.atom] if l.positive else f"not {names[l.atom]}" for l in self.literals()]
        return "{" + ", ".join(parts) + "}"


def is_tautology(c: Clause) -> bool:
    return (c.head is not None and c.head in c.pos) or not c.pos.isdisjoint(c.neg)


def is_virtual_constraint(c: Clause) -> bool:
    return c.head is not None and c.head in c.neg


def strip(program: Program) -> Program:
    """Drop tautologies, constraints and virtual constraints."""
    return program.with_clauses(
        c
        for c in program.clauses
        if c.head is not None and not is_tautology(c) and not is_virtual_constraint(c)
    )


def retained_constraints(program: Program) -> list[Clause]:
    """Headless clauses a candidate from ``strip(program)`` must still respect.

    Besides the constraints themselves this includes every non-tautological
    virtual constraint ``h :- B`` (``h`` in its negative body) as the
    constraint ``:- B``: a model of the stripped program is stable for the
    full program exactly when no such body holds in it.
    """
    out = []
    for c in program.clauses:
        if is_tautology(c):
            continue
        if c.head is None:
            out.append(c)
        elif c.head in c.neg:
            out.append(Clause(None, c.pos, c.neg))
    return out


def simplify(program: Program, lits: LiteralSet) -> Program:
    if not lits.consistent():
        raise ValueError("cannot simplify with an inconsistent literal set")
    plus, minus = lits.plus, lits.minus
    if not plus and not minus:
        return program
    zero = plus | minus
    kept = []
    for c in program.clauses:
        if c.head in zero or not plus.isdisjoint(c.neg) or not minus.isdisjoint(c.pos):
            continue
        # After the three deletion rules, body atoms mentioned by L are exactly
        # the literals of L, so erasing them is a set difference.
        pos = c.pos - plus if not plus.isdisjoint(c.pos) else c.pos
        neg = c.neg - minus if not minus.isdisjoint(c.neg) else c.neg
        kept.append(c if (pos is c.pos and neg is c.neg) else Clause(c.head, pos, neg))
    return program.with_clauses(kept)
