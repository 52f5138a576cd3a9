"""Procedures returning complete families of literal sets for a node program.

A family is complete for a program when every stable model of the program
is consistent with at least one member. The engine branches on members.
"""

from __future__ import annotations

from dataclasses import dataclass

from .preprocess import LiteralSet, is_tautology, is_virtual_constraint, strip
from .program import Literal, Program, classify

STRATEGY_NAMES = ("naive", "tsplit", "2prog")
CLI_STRATEGIES = ("auto",) + STRATEGY_NAMES + ("suffix-scan",)


class StrategyError(ValueError):
    pass


def _ls(plus=(), minus=()) -> LiteralSet:
    return LiteralSet(frozenset(plus), frozenset(minus))


def complete_naive(program: Program) -> list[LiteralSet]:
    atoms = program.atom_ids()
    if not atoms:
        raise StrategyError("naive split needs a nonempty program")
    a = min(atoms)
    return [_ls(plus=[a]), _ls(minus=[a])]


def _pick_tsplit_clause(program: Program):
    best = None
    for c in program.clauses:
        if best is None or len(c.pos) + len(c.neg) > len(best.pos) + len(best.neg):
            best = c
    return best


def complete_tsplit(program: Program) -> list[LiteralSet]:
    """Split on a clause ``x :- b1, ..., bk`` of maximum body length.

    Returns ``{x}`` followed by, for i = 1..k, ``{not x, b1, ..., b(i-1), not bi}``.
    """
    if not program.clauses:
        raise StrategyError("tsplit needs a nonempty program")
    clause = _pick_tsplit_clause(program)
    x = clause.head
    if x is None:
        raise StrategyError("tsplit needs a definite program")
    if is_tautology(clause) or is_virtual_constraint(clause):
        raise StrategyError("tsplit needs a stripped program")
    family = [_ls(plus=[x])]
    body = clause.body_literals()
    for i, beta in enumerate(body):
        lits = [Literal(x, False), *body[:i], beta.dual()]
        family.append(LiteralSet.of(lits))
    return family


@dataclass
class NeighborIndex:
    """Neighbor structure of a stripped definite 2-program.

    For an atom ``w``: ``x_type[w]`` holds atoms x with ``w :- not x`` or
    ``x :- not w``; ``y_type[w]`` atoms y with ``y :- w``; ``z_type[w]``
    atoms z with ``w :- z``.
    """

    atoms: list[int]
    facts: set[int]
    heads: set[int]
    pos_edges: set[tuple[int, int]]  # (x, y) for x :- y
    neg_edges: set[tuple[int, int]]  # (x, y) for x :- not y
    neighbors: dict[int, set[int]]
    x_type: dict[int, set[int]]
    y_type: dict[int, set[int]]
    z_type: dict[int, set[int]]

    @classmethod
    def build(cls, program: Program) -> "NeighborIndex":
        atoms = sorted(program.atom_ids())
        facts, heads = set(), set()
        pos_edges, neg_edges = set(), set()
        for c in program.clauses:
            if c.head is None or c.width > 2:
                raise StrategyError("2prog needs a definite 2-program")
            if is_tautology(c) or is_virtual_constraint(c):
                raise StrategyError("2prog needs a stripped program")
            heads.add(c.head)
            if c.pos:
                pos_edges.add((c.head, next(iter(c.pos))))
            elif c.neg:
                neg_edges.add((c.head, next(iter(c.neg))))
            else:
                facts.add(c.head)
        neighbors = {a: set() for a in atoms}
        x_type = {a: set() for a in atoms}
        y_type = {a: set() for a in atoms}
        z_type = {a: set() for a in atoms}
        for h, b in pos_edges:
            neighbors[h].add(b)
            neighbors[b].add(h)
            y_type[b].add(h)
            z_type[h].add(b)
        for h, b in neg_edges:
            neighbors[h].add(b)
            neighbors[b].add(h)
            x_type[h].add(b)
            x_type[b].add(h)
        return cls(atoms, facts, heads, pos_edges, neg_edges, neighbors, x_type, y_type, z_type)

    def n(self, a: int) -> int:
        return len(self.neighbors[a])


# Case labels reported alongside the family, in the fixed order they are tried.
CASES = ("1", "2", "3", "4", "5a", "5b", "6a", "6b")


def complete_2prog_case(program: Program) -> tuple[str, list[LiteralSet]]:
    """Six-case split for stripped definite 2-programs; returns (case, family)."""
    idx = NeighborIndex.build(program)
    if not idx.atoms:
        raise StrategyError("2prog needs a nonempty program")

    # Case 1: a fact.
    if idx.facts:
        return "1", [_ls(plus=[min(idx.facts)])]

    # Case 2: an atom heading no clause.
    for a in idx.atoms:
        if a not in idx.heads:
            return "2", [_ls(minus=[a])]

    pos_sorted = sorted(idx.pos_edges)

    # Case 3: x :- y together with x :- not y or y :- not x.
    for x, y in pos_sorted:
        if (x, y) in idx.neg_edges or (y, x) in idx.neg_edges:
            return "3", [_ls(plus=[x])]

    # Case 4: x :- y and y :- x.
    for x, y in pos_sorted:
        if (y, x) in idx.pos_edges:
            return "4", [_ls(plus=[x, y]), _ls(minus=[x, y])]

    # Case 5: an atom with exactly one neighbor.
    for x in idx.atoms:
        if idx.n(x) == 1:
            (y,) = idx.neighbors[x]
            if (x, y) in idx.pos_edges:
                return "5a", [_ls(plus=[x, y]), _ls(minus=[x, y])]
            assert (x, y) in idx.neg_edges, "case 5b requires x :- not y"
            return "5b", [_ls(plus=[x], minus=[y]), _ls(plus=[y], minus=[x])]

    for w in idx.atoms:
        xs, ys, zs = idx.x_type[w], idx.y_type[w], idx.z_type[w]
        assert xs.isdisjoint(ys) and xs.isdisjoint(zs) and ys.isdisjoint(zs)
        assert len(xs) + len(ys) + len(zs) == idx.n(w) >= 2

    def case_6a(w):
        xs, ys, zs = idx.x_type[w], idx.y_type[w], idx.z_type[w]
        return "6a", [_ls(plus=[w, *ys]), _ls(plus=xs, minus=[w, *zs])]

    for w in idx.atoms:
        if idx.y_type[w]:
            return case_6a(w)
    for w in idx.atoms:
        if idx.n(w) >= 3:
            return case_6a(w)

    # Case 6b: purely negative, every atom has exactly two neighbors.
    assert not idx.pos_edges and all(idx.n(a) == 2 for a in idx.atoms)
    w = idx.atoms[0]
    u, v = sorted(idx.neighbors[w])
    (u2,) = idx.neighbors[u] - {w}
    (v2,) = idx.neighbors[v] - {w}
    return "6b", [
        _ls(plus=[u, v], minus=[w]),
        _ls(plus=[w, u2], minus=[u]),
        _ls(plus=[w, v2], minus=[v]),
    ]


def complete_2prog(program: Program) -> list[LiteralSet]:
    return complete_2prog_case(program)[1]


STRATEGIES = {
    "naive": complete_naive,
    "tsplit": complete_tsplit,
    "2prog": complete_2prog,
}


def select_strategy(program: Program, requested: str = "auto") -> str:
    """Resolve ``auto`` and validate explicit requests against the program class.

    The class is taken from the stripped program, since the strategies only
    ever see stripped node programs.
    """
    if requested not in CLI_STRATEGIES:
        raise StrategyError(f"unknown strategy {requested!r}; choose from {', '.join(CLI_STRATEGIES)}")
    t = classify(strip(program)).t
    if requested == "auto":
        return "2prog" if t <= 2 else "tsplit"
    if requested == "2prog" and t > 2:
        raise StrategyError(f"strategy 2prog needs a 2-program, got a {t}-program")
    return requested
