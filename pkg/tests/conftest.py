"""Shared brute-force oracles for the test suite.

Everything here works by exhaustive search or dynamic programming and never
touches modular inverses, so it can referee the library's formula paths.
"""

from math import gcd

import pytest


def rep_table(gens, limit):
    """Bytearray DP: rep[x] == 1 iff x is a nonnegative combination of gens."""
    rep = bytearray(limit + 1)
    rep[0] = 1
    for x in range(1, limit + 1):
        for g in gens:
            if g <= x and rep[x - g]:
                rep[x] = 1
                break
    return rep


def naive_frobenius(gens, limit=None):
    """Largest non-representable integer, scanning until min(gens) consecutive
    representable values appear (no later gap can exist past such a run)."""
    m = min(gens)
    if m == 1:
        return -1
    if limit is None:
        limit = max(gens) * sorted(gens)[-2] + m  # a coprime-pair bound with slack
    rep = rep_table(gens, limit)
    run, last_gap = 0, -1
    for x in range(limit + 1):
        if rep[x]:
            run += 1
            if run >= m:
                return last_gap
        else:
            run, last_gap = 0, x
    raise AssertionError(f"scan limit {limit} too small for {gens}")


def naive_min_relation(n_i, n_j, n_k):
    """Least c >= 1 with c*n_i = x*n_j + y*n_k for some x, y >= 0, found by
    exhaustive search over x."""
    c = 1
    while True:
        m = c * n_i
        x = 0
        while x * n_j <= m:
            if (m - x * n_j) % n_k == 0:
                return c
            x += 1
        c += 1


def descending_triples(max_n1, min_n1=4):
    """All (n1, n2, n3) with n1 > n2 > n3 >= 2, n1 <= max_n1, gcd 1."""
    for n1 in range(min_n1, max_n1 + 1):
        for n2 in range(3, n1):
            g12 = gcd(n1, n2)
            for n3 in range(2, n2):
                if g12 > 1 and gcd(g12, n3) > 1:
                    continue
                yield (n1, n2, n3)


def pairwise_coprime(n1, n2, n3):
    return gcd(n1, n2) == 1 and gcd(n1, n3) == 1 and gcd(n2, n3) == 1


@pytest.fixture(scope="session")
def small_coprime_minimal_triples():
    """Validated pairwise coprime minimal triples with n1 <= 60."""
    from nsg import make_triple

    out = []
    for n1, n2, n3 in descending_triples(60):
        if not pairwise_coprime(n1, n2, n3):
            continue
        t = make_triple(n1, n2, n3)
        if t.is_minimal:
            out.append(t)
    return out
