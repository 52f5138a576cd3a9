"""Closed-form bounds and branching recurrences.

The recurrences come in two flavours. The *terminal* recurrences bound the
number of terminal calls of the search (and hence the number of stable
models); the *call* recurrences add one per internal node and bound the
total number of invocations. Both take a base constant for the small
cases, measured by :mod:`stablemodels.bench`.
"""

from __future__ import annotations

import math
from functools import lru_cache

# Maximum total calls of the 2prog search over every stripped definite
# 2-program on at most three atoms (all 2**15 clause sets over three
# labelled atoms); recomputed in tests/test_bounds.py.
K2_CALLS = 5
# Same measurement for terminal calls.
K2_TERMINAL = 3


def g(n: int) -> int:
    """Maximum number of stable models of a 2-program with ``n`` atoms."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 1:
        return 1
    r = n % 3
    if r == 0:
        return 3 ** (n // 3)
    if r == 1:
        return 4 * 3 ** ((n - 4) // 3)
    return 2 * 3 ** ((n - 2) // 3)


@lru_cache(maxsize=None)
def alpha(t: int, tol: float = 1e-9) -> float:
    """Largest real root of x^t = x^(t-1) + ... + x + 1, by bisection on (1, 2)."""
    if t < 2:
        raise ValueError("t must be at least 2")

    def f(x: float) -> float:
        return x**t - sum(x**i for i in range(t))

    lo, hi = 1.0, 2.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def lower_growth(t: int) -> float:
    """Per-atom growth of the disjoint-copies lower bound for t-programs."""
    return math.comb(2 * t - 1, t) ** (1 / (2 * t - 1))


def lower(t: int, n: int) -> int:
    return math.floor(math.comb(2 * t - 1, t) ** (n / (2 * t - 1)))


def two_program_terminal(n: int, k: int = K2_TERMINAL) -> int:
    """max{c(n-1), 2c(n-2), c(n-1)+c(n-4), 3c(n-3)} with c = k below 4."""
    c = [k] * 4
    for i in range(4, n + 1):
        c.append(max(c[i - 1], 2 * c[i - 2], c[i - 1] + c[i - 4], 3 * c[i - 3]))
    return c[n]


def two_program_calls(n: int, k: int = K2_CALLS) -> int:
    """Call-count version of :func:`two_program_terminal` (one extra per internal node)."""
    c = [k] * 4
    for i in range(4, n + 1):
        step = 1 + max(c[i - 1], 2 * c[i - 2], c[i - 1] + c[i - 4], 3 * c[i - 3])
        c.append(max(c[i - 1], step))
    return c[n]


def two_program_bound(n: int, k: float = K2_CALLS) -> float:
    return k * 3 ** (n / 3)


def tsplit_terminal(n: int, t: int, k: int) -> int:
    """c(n-1) + ... + c(n-t) with c = k below t."""
    c = [k] * t
    for i in range(t, n + 1):
        c.append(sum(c[i - t:i]))
    return c[n]


@lru_cache(maxsize=None)
def tsplit_worst_calls(n: int, t: int) -> int:
    """Largest possible call count of the tsplit search with ``n`` free atoms.

    A node splits on a clause with k <= min(t, n) - 1 body literals into
    members of sizes 1..k+1, and a node with no free atom is a leaf.
    """
    if n == 0:
        return 1
    return 1 + sum(tsplit_worst_calls(n - i, t) for i in range(1, min(t, n) + 1))


def tsplit_base(t: int) -> int:
    """Base constant for tsplit call bounds: the worst case on at most ``t`` atoms."""
    return tsplit_worst_calls(t, t)


def tsplit_bound(n: int, t: int, k: float | None = None) -> float:
    return (tsplit_base(t) if k is None else k) * alpha(t) ** n


def naive_worst_calls(n: int) -> int:
    return 2 ** (n + 1) - 1
