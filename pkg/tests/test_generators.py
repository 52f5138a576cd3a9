import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from stablemodels import bounds
from stablemodels.engine import count_models, enumerate_models
from stablemodels.generators import (
    brute_force,
    disjoint_union,
    gen_cycle,
    gen_kcopies,
    gen_pnt,
    gen_random,
    gen_s6,
    gen_tight,
    tight_parts,
)
from stablemodels.program import classify, parse_program

from conftest import named


def test_pnt_sizes():
    assert len(gen_pnt(3, 1).clauses) == 6
    assert len(gen_pnt(5, 2).clauses) == 30
    for n, t in [(4, 1), (6, 3), (7, 2)]:
        p = gen_pnt(n, t)
        assert len(p.clauses) == n * math.comb(n - 1, t)
        assert p.size == (t + 1) * len(p.clauses)


@pytest.mark.parametrize("n,t", [(2, 1), (3, 1), (4, 2), (5, 2), (5, 3), (6, 2)])
def test_pnt_models_are_all_subsets_of_size_n_minus_t(n, t):
    models = set(brute_force(gen_pnt(n, t)))
    assert models == {frozenset(s) for s in itertools.combinations(range(n), n - t)}


def test_pnt_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gen_pnt(3, 3)
    with pytest.raises(ValueError):
        gen_pnt(3, 0)


def test_kcopies_multiplies():
    base = gen_pnt(3, 1)
    for k in (1, 2, 3):
        p = gen_kcopies(base, k)
        assert p.num_atoms == 3 * k and len(p.clauses) == 6 * k
        assert len(brute_force(p)) == 3**k
    assert count_models(gen_kcopies(gen_s6(), 2))[0] == 9
    assert count_models(gen_kcopies(gen_s6(), 3))[0] == 27


def test_disjoint_union_renames_apart():
    p = disjoint_union([parse_program("a :- not b."), parse_program("a.")])
    assert p.atoms == ("a__0", "b__0", "a__1")


def test_s6_models():
    p = gen_s6()
    assert len(p.clauses) == 12 and classify(p).t == 2
    expected = {frozenset(s) for s in [("a0", "a1", "a3", "a4"), ("a1", "a2", "a4", "a5"), ("a2", "a3", "a5", "a0")]}
    assert named(p, brute_force(p)) == expected


def test_cycles():
    # Odd negative cycles have no stable model, even ones have two.
    for n in range(1, 9):
        assert len(brute_force(gen_cycle(n))) == (2 if n % 2 == 0 else 0)


def test_random_is_deterministic():
    assert gen_random(6, 3, 12, 7) == gen_random(6, 3, 12, 7)
    assert gen_random(6, 3, 12, 7) != gen_random(6, 3, 12, 8)
    assert gen_random(0, 2, 5, 1).clauses == ()


@given(st.integers(1, 9), st.integers(2, 5), st.integers(0, 25), st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_random_respects_width(n, t, k, seed):
    p = gen_random(n, t, k, seed)
    assert len(p.clauses) == k
    assert all(c.width <= t and c.head not in c.pos | c.neg for c in p.clauses)


def test_brute_force_examples():
    assert brute_force(parse_program("a.")) == [frozenset({0})]
    assert brute_force(parse_program("a :- a.")) == [frozenset()]
    assert brute_force(parse_program("a :- not a.")) == []
    assert brute_force(parse_program("a.\n:- a.")) == []
    assert brute_force(parse_program("a :- not b.\nb :- not a.\n:- b.")) == [frozenset({0})]


def test_tight_parts_sum():
    for n in range(2, 30):
        parts = tight_parts(n)
        assert sum(parts) == n and math.prod(parts) == bounds.g(n)


@pytest.mark.parametrize("n", range(2, 13))
def test_tight_program_reaches_maximum(n):
    p = gen_tight(n)
    assert classify(p).t == 2
    assert count_models(p)[0] == bounds.g(n)


def test_two_programs_never_exceed_maximum():
    for seed in range(400):
        n = 1 + seed % 10
        p = gen_random(n, 2, 3 * n, seed)
        assert len(enumerate_models(p).models) <= bounds.g(n)


def test_binomial_identity():
    # P(n, t-1) is a t-program whose count is comb(n, t-1), the maximum for
    # the largest antichain it realizes.
    for t in range(2, 8):
        for n in range(t, 9):
            assert count_models(gen_pnt(n, t - 1), strategy="tsplit")[0] == math.comb(n, t - 1)
