"""Enumerate stable models of ground logic programs with bounded branching."""

from .engine import EnumerationResult, SearchStats, count_models, enumerate_models
from .generators import brute_force, gen_kcopies, gen_pnt, gen_random, gen_s6
from .preprocess import LiteralSet, retained_constraints, simplify, strip
from .program import Clause, Literal, ParseError, Program, classify, parse_program, write_program
from .semantics import is_stable, least_model, reduct, satisfies_constraints
from .strategies import complete_2prog, complete_naive, complete_tsplit, select_strategy
from .suffix_scan import enumerate_general, full_family, scan

__all__ = [
    "Clause", "EnumerationResult", "Literal", "LiteralSet", "ParseError", "Program",
    "SearchStats", "brute_force", "classify", "complete_2prog", "complete_naive",
    "complete_tsplit", "count_models", "enumerate_general", "enumerate_models",
    "full_family", "gen_kcopies", "gen_pnt", "gen_random", "gen_s6", "is_stable",
    "least_model", "parse_program", "reduct", "retained_constraints",
    "satisfies_constraints", "scan", "select_strategy", "simplify", "strip",
    "write_program",
]
