import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablemodels.generators import brute_force, gen_random
from stablemodels.preprocess import LiteralSet, retained_constraints, simplify, strip
from stablemodels.program import Clause, parse_program

from conftest import named


def L(plus=(), minus=()):
    return LiteralSet(frozenset(plus), frozenset(minus))


def test_literal_set_consistency_and_zero():
    assert L([0, 1], [2]).consistent()
    assert not L([0, 1], [1]).consistent()
    assert L([0], [2]).zero() == {0, 2}
    assert L([0]) | L(minus=[1]) == L([0], [1])


def test_strip_examples():
    assert strip(parse_program("a :- a.")).clauses == ()
    assert strip(parse_program("a :- not a.")).clauses == ()
    p = parse_program(":- b.\na :- not b.")
    assert strip(p).named_clauses() == [("a", (), ("b",))]
    assert retained_constraints(p) == [Clause(None, frozenset({p.atom_id("b")}))]


def test_strip_removes_intersecting_bodies():
    p = parse_program("a :- b, not b.\nc :- d.")
    assert strip(p).named_clauses() == [("c", ("d",), ())]


def test_virtual_constraint_is_retained_as_constraint():
    p = parse_program("a :- b, not a.")
    assert retained_constraints(p) == [Clause(None, frozenset({1}), frozenset({0}))]


def test_strip_idempotent_and_definite():
    p = parse_program(":- a.\na :- a.\nb :- not b.\nc :- d, not d.\ne :- not f.\nf.")
    s = strip(p)
    assert strip(s) == s
    assert all(c.head is not None for c in s.clauses)
    assert s.named_clauses() == [("e", (), ("f",)), ("f", (), ())]


ABC = parse_program("a :- b, not c.")  # a=0, b=1, c=2


@pytest.mark.parametrize(
    "lits, expected",
    [
        (L(plus=[2]), []),  # negative body meets L+
        (L(minus=[1]), []),  # positive body meets L-
        (L(plus=[1]), [("a", (), ("c",))]),  # literal erased
        (L(minus=[0]), []),  # head in L0
        (L(plus=[0]), []),
        (L(minus=[2]), [("a", ("b",), ())]),
        (L(), [("a", ("b",), ("c",))]),
    ],
)
def test_simplify_rules(lits, expected):
    assert simplify(ABC, lits).named_clauses() == expected


def test_simplify_rejects_inconsistent():
    with pytest.raises(ValueError):
        simplify(ABC, L([1], [1]))


def _random_lits(rng, n):
    plus, minus = set(), set()
    for a in range(n):
        r = rng.random()
        if r < 0.2:
            plus.add(a)
        elif r < 0.4:
            minus.add(a)
    return L(plus, minus)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.sampled_from([2, 3, 4]), st.integers(0, 2**32))
def test_simplification_conserves_models(n, t, seed):
    rng = random.Random(seed)
    p = gen_random(n, t, rng.randint(n, 3 * n), seed)
    lits = _random_lits(rng, n)
    q = simplify(p, lits)
    reduced = set(brute_force(q))
    for m in brute_force(p):
        if lits.admits(m):
            assert m - lits.plus in reduced


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.sampled_from([2, 3, 4]), st.integers(0, 2**32))
def test_simplify_shrinks_and_clears_assigned_atoms(n, t, seed):
    rng = random.Random(seed)
    p = gen_random(n, t, rng.randint(n, 3 * n), seed)
    lits = _random_lits(rng, n)
    q = simplify(p, lits)
    assert q.size <= p.size
    assert len(q.atom_ids()) <= len(p.atom_ids())
    assert q.atom_ids().isdisjoint(lits.zero())


def test_conservation_example_from_two_cycle():
    p = parse_program("a :- not b.\nb :- not a.")
    q = simplify(p, L(plus=[0]))
    assert q.clauses == ()
    assert named(q, brute_force(q)) == {frozenset()}
