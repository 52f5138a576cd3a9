"""Ground programs: atoms, clauses, the text format and structural classification.

Text format, one clause per line (a clause may also span lines; ``.``
terminates it)::

    a :- b, not c.     % definite clause
    a.                 % fact
    :- a, not b.       % constraint

``%`` starts a comment running to the end of the line.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, TextIO

ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class Literal(NamedTuple):
    atom: int
    positive: bool = True

    def dual(self) -> "Literal":
        return Literal(self.atom, not self.positive)


@dataclass(frozen=True)
class Clause:
    head: int | None
    pos: frozenset[int] = frozenset()
    neg: frozenset[int] = frozenset()

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def width(self) -> int:
        """Number of literals, the head included."""
        return (self.head is not None) + len(self.pos) + len(self.neg)

    def atoms(self) -> set[int]:
        s = set(self.pos) | self.neg
        if self.head is not None:
            s.add(self.head)
        return s

    def body_literals(self) -> list[Literal]:
        """Body literals ordered by atom id."""
        lits = [Literal(a, True) for a in self.pos] + [Literal(a, False) for a in self.neg]
        lits.sort()
        return lits


class OccurrenceIndex(NamedTuple):
    heads: tuple[tuple[int, ...], ...]
    pos: tuple[tuple[int, ...], ...]
    neg: tuple[tuple[int, ...], ...]


def build_index(num_atoms: int, clauses: Sequence[Clause]) -> OccurrenceIndex:
    heads: list[list[int]] = [[] for _ in range(num_atoms)]
    pos: list[list[int]] = [[] for _ in range(num_atoms)]
    neg: list[list[int]] = [[] for _ in range(num_atoms)]
    for cid, c in enumerate(clauses):
        if c.head is not None:
            heads[c.head].append(cid)
        for a in sorted(c.pos):
            pos[a].append(cid)
        for a in sorted(c.neg):
            neg[a].append(cid)
    return OccurrenceIndex(
        tuple(map(tuple, heads)), tuple(map(tuple, pos)), tuple(map(tuple, neg))
    )


@dataclass(frozen=True)
class Program:
    """An immutable ground program over an atom table.

    ``atoms`` maps ids to names and may contain atoms that no clause
    mentions (e.g. after simplification); :meth:`atom_ids` gives the atoms
    that actually occur.
    """

    atoms: tuple[str, ...]
    clauses: tuple[Clause, ...] = ()
    _ids: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._ids is None:
            ids = {name: i for i, name in enumerate(self.atoms)}
            if len(ids) != len(self.atoms):
                raise ValueError("duplicate atom names in atom table")
            object.__setattr__(self, "_ids", ids)

    @classmethod
    def build(cls, atoms: Iterable[str], clauses: Iterable[Clause] = ()) -> "Program":
        return cls(tuple(atoms), tuple(clauses))

    def with_clauses(self, clauses: Iterable[Clause]) -> "Program":
        """A program over the same atom table."""
        return Program(self.atoms, tuple(clauses), self._ids)

    def __len__(self) -> int:
        return len(self.clauses)

    @property
    def num_atoms(self) -> int:
        return len(self.atoms)

    @cached_property
    def size(self) -> int:
        """Total literal occurrences, heads included (the ``m`` of the bounds)."""
        return sum(c.width for c in self.clauses)

    @cached_property
    def index(self) -> OccurrenceIndex:
        return build_index(len(self.atoms), self.clauses)

    def atom_ids(self) -> frozenset[int]:
        occurring: set[int] = set()
        for c in self.clauses:
            occurring |= c.atoms()
        return frozenset(occurring)

    def atom_id(self, name: str) -> int:
        return self._ids[name]

    def has_atom(self, name: str) -> bool:
        return name in self._ids

    def names(self, atoms: Iterable[int]) -> list[str]:
        return sorted(self.atoms[a] for a in atoms)

    def named_clauses(self) -> list[tuple]:
        """Clauses keyed by atom names, sorted; used to compare programs across atom tables."""
        out = []
        for c in self.clauses:
            head = None if c.head is None else self.atoms[c.head]
            out.append((head or "", tuple(self.names(c.pos)), tuple(self.names(c.neg))))
        out.sort()
        return out


class _Scanner:
    TOKEN = re.compile(r"\s+|%[^\n]*|:-|[A-Za-z_][A-Za-z0-9_]*|[,.]")

    def __init__(self, text: str):
        self.text = text.replace("\r\n", "\n").replace("\r", "\n")
        self.pos = 0
        self.line = 1
        self.col = 1

    def tokens(self):
        text = self.text
        while self.pos < len(text):
            m = self.TOKEN.match(text, self.pos)
            if m is None:
                raise ParseError(f"unexpected character {text[self.pos]!r}", self.line, self.col)
            tok = m.group()
            if not tok[0].isspace() and tok[0] != "%":
                yield tok, self.line, self.col
            nl = tok.count("\n")
            if nl:
                self.line += nl
                self.col = len(tok) - tok.rfind("\n")
            else:
                self.col += len(tok)
            self.pos = m.end()
        yield None, self.line, self.col


def parse_program(source: str | TextIO) -> Program:
    """Parse the canonical text format.

    Atoms are interned in order of first occurrence. Repeated literals in a
    body collapse; repeated clauses are kept.
    """
    text = source if isinstance(source, str) else source.read()
    ids: dict[str, int] = {}
    clauses: list[Clause] = []

    def intern(name: str) -> int:
        if name not in ids:
            ids[name] = len(ids)
        return ids[name]

    # Each clause is collected as a flat list of (negated, name, line, col) items,
    # split at ":-" into head part and body part.
    head_part: list | None = None
    current: list = []
    expect_literal = True
    negated = False
    for tok, line, col in _Scanner(text).tokens():
        if tok is None:
            if current or head_part is not None or negated:
                raise ParseError("unterminated clause (missing '.')", line, col)
            break
        if tok == ":-":
            if head_part is not None:
                raise ParseError("second ':-' in clause", line, col)
            if negated or (current and expect_literal):
                raise ParseError("expected atom before ':-'", line, col)
            head_part, current = current, []
            expect_literal = True
            continue
        if tok == ",":
            if expect_literal:
                raise ParseError("expected literal before ','", line, col)
            expect_literal = True
            continue
        if tok == ".":
            if negated or (expect_literal and (current or head_part is not None)):
                raise ParseError("expected literal before '.'", line, col)
            if head_part is None:
                head_part, body = current, []
            else:
                body = current
                if not body:
                    raise ParseError("empty body after ':-'", line, col)
            if len(head_part) > 1:
                raise ParseError("clause has more than one head", *head_part[1][2:])
            head = None
            if head_part:
                neg_head, name, hl, hc = head_part[0]
                if neg_head:
                    raise ParseError("negated head", hl, hc)
                head = intern(name)
            pos: set[int] = set()
            neg: set[int] = set()
            for is_neg, name, _, _ in body:
                (neg if is_neg else pos).add(intern(name))
            clauses.append(Clause(head, frozenset(pos), frozenset(neg)))
            head_part, current, expect_literal, negated = None, [], True, False
            continue
        # identifier
        if tok == "not" and not negated:
            if not expect_literal:
                raise ParseError("expected ',' or '.'", line, col)
            negated = True
            continue
        if tok == "not":
            raise ParseError("'not' is reserved and cannot name an atom", line, col)
        if not expect_literal:
            if head_part is None and current:
                raise ParseError("clause has more than one head", line, col)
            raise ParseError("expected ',' or '.'", line, col)
        current.append((negated, tok, line, col))
        negated = False
        expect_literal = False
    return Program(tuple(ids), tuple(clauses))


def format_clause(program: Program, clause: Clause) -> str:
    names = program.atoms
    body = [names[a] for a in sorted(clause.pos)] + [f"not {names[a]}" for a in sorted(clause.neg)]
    head = "" if clause.head is None else names[clause.head]
    if not body:
        return f"{head}."
    sep = ":- " if clause.head is None else " :- "
    return f"{head}{sep}{', '.join(body)}."


def write_program(program: Program, out: TextIO | None = None) -> str:
    text = "".join(format_clause(program, c) + "\n" for c in program.clauses)
    if out is not None:
        out.write(text)
    return text


def read_program(path: str) -> Program:
    if path == "-":
        import sys

        return parse_program(sys.stdin.read())
    with io.open(path, encoding="utf-8", newline="") as fh:
        return parse_program(fh.read())


@dataclass(frozen=True)
class ProgramClass:
    t: int
    purely_negative: bool
    has_dual_pair: bool
    definite: bool


def classify(program: Program) -> ProgramClass:
    t = max((c.width for c in program.clauses), default=0)
    purely_negative = all(not c.pos for c in program.clauses)
    definite = all(c.head is not None for c in program.clauses)
    single_neg = {
        (c.head, next(iter(c.neg)))
        for c in program.clauses
        if c.head is not None and not c.pos and len(c.neg) == 1
    }
    has_dual_pair = any((b, a) in single_neg for a, b in single_neg if a != b)
    return ProgramClass(t, purely_negative, has_dual_pair, definite)
