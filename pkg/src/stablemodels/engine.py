"""Branch-and-reduce enumeration of stable models."""

from __future__ import annotations

from dataclasses import dataclass, field

from .preprocess import LiteralSet, retained_constraints, simplify, strip
from .program import Program
from .semantics import Model, is_stable, satisfies_constraints
from .strategies import STRATEGIES, select_strategy


@dataclass
class SearchStats:
    """Recursion-tree counters.

    ``calls`` counts every invocation. ``leaves`` counts invocations whose
    simplified program was empty (a candidate was tested) and ``pruned``
    those with an inconsistent literal set; their sum is the number of
    terminal calls, i.e. the value of the branching recurrence that bounds
    the model count.
    """

    calls: int = 0
    leaves: int = 0
    pruned: int = 0
    models_found: int = 0
    max_depth: int = 0
    per_depth_calls: list[int] = field(default_factory=list)

    @property
    def terminal(self) -> int:
        return self.leaves + self.pruned

    def as_dict(self) -> dict:
        return {
            "calls": self.calls,
            "leaves": self.leaves,
            "pruned": self.pruned,
            "terminal": self.terminal,
            "models_found": self.models_found,
            "max_depth": self.max_depth,
            "per_depth_calls": list(self.per_depth_calls),
        }


@dataclass
class EnumerationResult:
    models: list[Model]
    stats: object
    strategy: str = ""
    tree: list | None = None

    def named(self, program: Program) -> list[list[str]]:
        return [program.names(m) for m in self.models]


def model_sort_key(program: Program):
    names = program.atoms

    def key(model):
        return (len(model), sorted(names[a] for a in model))

    return key


def sort_models(program: Program, models) -> list[Model]:
    return sorted(models, key=model_sort_key(program))


@dataclass
class TreeNode:
    """One recorded call: ``parent`` is -1 for the root."""

    parent: int
    depth: int
    kind: str  # "branch", "leaf" or "pruned"
    children: list[int] = field(default_factory=list)


class _Search:
    def __init__(self, program, strategy, max_models, record_tree):
        self.stripped = strip(program)
        self.constraints = retained_constraints(program)
        self.complete = STRATEGIES[strategy]
        self.max_models = max_models
        self.stats = SearchStats()
        self.found: dict[Model, None] = {}
        self.tree: list[TreeNode] | None = [] if record_tree else None

    def done(self) -> bool:
        return self.max_models is not None and len(self.found) >= self.max_models

    def _record(self, parent, depth, kind):
        if self.tree is None:
            return -1
        self.tree.append(TreeNode(parent, depth, kind))
        me = len(self.tree) - 1
        if parent >= 0:
            self.tree[parent].children.append(me)
        return me

    def visit(self, lits: LiteralSet, depth: int, parent: int = -1):
        st = self.stats
        st.calls += 1
        if depth >= len(st.per_depth_calls):
            st.per_depth_calls.append(0)
        st.per_depth_calls[depth] += 1
        st.max_depth = max(st.max_depth, depth)

        if not lits.consistent():
            st.pruned += 1
            self._record(parent, depth, "pruned")
            return
        node = simplify(self.stripped, lits)
        if not node.clauses:
            st.leaves += 1
            self._record(parent, depth, "leaf")
            candidate = lits.plus
            if is_stable(self.stripped, candidate) and satisfies_constraints(self.constraints, candidate):
                if candidate not in self.found:
                    self.found[candidate] = None
                    st.models_found += 1
            return
        me = self._record(parent, depth, "branch")
        for member in self.complete(node):
            self.visit(lits | member, depth + 1, me)
            if self.done():
                return


def _run(program, assumptions, strategy, max_models, record_tree):
    if max_models is not None and max_models < 1:
        raise ValueError("max_models must be positive")
    name = select_strategy(program, strategy)
    if name == "suffix-scan":
        raise ValueError("suffix-scan is not a branching strategy; use enumerate_general")
    search = _Search(program, name, max_models, record_tree)
    search.visit(assumptions or LiteralSet(), 0)
    return search, name


def enumerate_models(
    program: Program,
    assumptions: LiteralSet | None = None,
    strategy: str = "auto",
    max_models: int | None = None,
    record_tree: bool = False,
) -> EnumerationResult:
    """All stable models of ``program`` consistent with ``assumptions``.

    Constraints, tautologies and virtual constraints are stripped before the
    search and re-checked on every candidate. Models are deduplicated and
    sorted by size, then by their sorted atom names.
    """
    search, name = _run(program, assumptions, strategy, max_models, record_tree)
    return EnumerationResult(sort_models(program, search.found), search.stats, name, search.tree)


def count_models(
    program: Program,
    assumptions: LiteralSet | None = None,
    strategy: str = "auto",
) -> tuple[int, SearchStats]:
    search, _ = _run(program, assumptions, strategy, None, False)
    return len(search.found), search.stats


def recurrence_from_tree(tree: list[TreeNode]) -> int:
    """Branching recurrence recomputed from a recorded tree: 1 at terminal calls, the sum over children otherwise."""
    value = [0] * len(tree)
    for i in range(len(tree) - 1, -1, -1):
        node = tree[i]
        value[i] = 1 if node.kind != "branch" else sum(value[c] for c in node.children)
    return value[0] if tree else 0
