"""Generator-triple validation and the brute-force oracle side of the package.

The oracle functions here (`frobenius_oracle`, `min_relation_oracle`, `gaps`)
deliberately avoid the closed formulas implemented elsewhere: they work by
residue tables and incremental search, so that the two sides can referee each
other. They are meant for desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .arith import GENERATOR_LIMIT, mod_inverse
from .errors import (
    DegenerateGenerators,
    NotCoprime,
    NotCoprimeOverall,
    NotPairwiseCoprime,
    Overflow,
)

# Sentinel for "no semigroup element known in this residue class yet".
# Strictly larger than any reachable table entry, and safe to add generators
# to since Python integers do not wrap.
_UNREACHED = 1 << 62


@dataclass(frozen=True)
class Triple:
    """A validated generator triple, sorted so that n1 > n2 > n3 >= 2.

    `pairwise_gcds` holds (gcd(n1,n2), gcd(n1,n3), gcd(n2,n3)).
    `is_minimal` records whether none of the generators is representable by
    the other two, i.e. the triple is a minimal generating system.
    """

    n1: int
    n2: int
    n3: int
    pairwise_gcds: tuple[int, int, int]
    is_pairwise_coprime: bool
    is_minimal: bool

    @property
    def gens(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def gen(self, i: int) -> int:
        """Generator at 1-based index i (n1 is the largest)."""
        if i not in (1, 2, 3):
            raise ValueError(f"index must be 1, 2 or 3, got {i}")
        return self.gens[i - 1]


@dataclass(frozen=True)
class RelationWitness:
    """A minimal relation c * n_i = lam_j * n_j + lam_k * n_k.

    The indices j < k are the two positions other than i in the triple's
    descending order. Constructed only by `min_relation_oracle`, which checks
    the combination exactly before returning.
    """

    c: int
    lam_j: int
    lam_k: int


def make_triple(a: int, b: int, c: int) -> Triple:
    """Validate and sort three generators into a Triple.

    Rejects duplicates and generators equal to 1 (DegenerateGenerators: the
    one/two-generator path applies), a shared overall factor
    (NotCoprimeOverall), and generators beyond GENERATOR_LIMIT (Overflow).
    """
    for g in (a, b, c):
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"generators must be positive integers, got {g!r}")
        if g > GENERATOR_LIMIT:
            raise Overflow(f"generator {g} exceeds the admissible bound {GENERATOR_LIMIT}")
    n1, n2, n3 = sorted((a, b, c), reverse=True)
    if n1 == n2 or n2 == n3:
        raise DegenerateGenerators(f"duplicate generator in ({a}, {b}, {c})")
    if n3 == 1:
        raise DegenerateGenerators("a generator equal to 1 generates everything")
    if gcd(gcd(n1, n2), n3) != 1:
        raise NotCoprimeOverall(f"gcd({n1}, {n2}, {n3}) > 1")
    g12, g13, g23 = gcd(n1, n2), gcd(n1, n3), gcd(n2, n3)
    minimal = (
        not _member_pair(n1, n2, n3)
        and not _member_pair(n2, n1, n3)
        and not _member_pair(n3, n1, n2)
    )
    return Triple(
        n1,
        n2,
        n3,
        pairwise_gcds=(g12, g13, g23),
        is_pairwise_coprime=(g12 == 1 and g13 == 1 and g23 == 1),
        is_minimal=minimal,
    )


def member_two_gen(m: int, a: int, b: int) -> bool:
    """Is m representable as x*a + y*b with x, y >= 0, for coprime a, b >= 2?

    Uses the remainder test: m is representable iff the least x >= 0 with
    x*a = m (mod b), namely [m * a^-1]_b, satisfies x*a <= m.
    """
    if m < 0:
        raise ValueError("membership is defined for nonnegative integers")
    if a < 2 or b < 2:
        raise ValueError("member_two_gen needs both generators >= 2")
    inv = mod_inverse(a, b)  # raises NotCoprime when gcd(a, b) > 1
    return ((m * inv.value) % b) * a <= m


def _member_pair(m: int, a: int, b: int) -> bool:
    # Membership of m in <a, b> for arbitrary positive a, b (not necessarily
    # coprime): factor out d = gcd(a, b), then apply the coprime test.
    d = gcd(a, b)
    if m % d:
        return False
    m, a, b = m // d, a // d, b // d
    if a == 1 or b == 1:
        return True
    return member_two_gen(m, a, b)


def _validated_gens(gens: Iterable[int]) -> list[int]:
    gs = list(gens)
    if not 1 <= len(gs) <= 3:
        raise ValueError(f"expected 1 to 3 generators, got {len(gs)}")
    for g in gs:
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"generators must be positive integers, got {g!r}")
        if g > GENERATOR_LIMIT:
            raise Overflow(f"generator {g} exceeds the admissible bound {GENERATOR_LIMIT}")
    overall = 0
    for g in gs:
        overall = gcd(overall, g)
    if overall != 1:
        raise NotCoprimeOverall(f"gcd{tuple(gs)} = {overall} > 1")
    return gs


def _apery_table(gens: Sequence[int]) -> list[int]:
    # Least semigroup element in each residue class modulo the smallest
    # generator, by relaxation until a fixpoint. Each generator is relaxed
    # along its residue cycles starting from the cycle minimum, which makes
    # one lap per cycle complete for that generator; the outer loop repeats
    # until no entry improves.
    m = min(gens)
    table = [_UNREACHED] * m
    table[0] = 0
    others = sorted({g for g in gens if g % m})
    while True:
        improved = False
        for g in others:
            gm = g % m
            h = gcd(gm, m)
            cycle = m // h
            for start in range(h):
                r = start
                best_r, best_v = start, table[start]
                for _ in range(cycle - 1):
                    r += gm
                    if r >= m:
                        r -= m
                    if table[r] < best_v:
                        best_r, best_v = r, table[r]
                if best_v >= _UNREACHED:
                    continue
                r, v = best_r, best_v
                for _ in range(cycle - 1):
                    r += gm
                    if r >= m:
                        r -= m
                    w = v + g
                    if w < table[r]:
                        table[r] = w
                        improved = True
                        v = w
                    else:
                        v = table[r]
        if not improved:
            break
    return table


def frobenius_oracle(gens: Iterable[int]) -> int:
    """Largest integer not representable by the generators, by residue table.

    Works for one, two or three generators with overall gcd 1. Returns -1
    when the generators produce every nonnegative integer (a generator is 1).
    Runs in O(min(gens)) memory; intended as a referee, not a fast path.
    """
    gs = _validated_gens(gens)
    m = min(gs)
    if m == 1:
        return -1
    table = _apery_table(gs)
    top = max(table)
    if top >= _UNREACHED:
        # unreachable given the gcd-1 validation above
        raise NotCoprimeOverall(f"residue classes unreachable for {tuple(gs)}")
    return top - m


def gaps(gens: Iterable[int]) -> list[int]:
    """The finite set of non-representable integers, in increasing order."""
    gs = _validated_gens(gens)
    m = min(gs)
    if m == 1:
        return []
    table = _apery_table(gs)
    frob = max(table) - m
    return [x for x in range(1, frob + 1) if table[x % m] > x]


def min_relation_oracle(t: Triple, i: int) -> RelationWitness:
    """Least c >= 1 with c * n_i representable by the other two generators.

    Pairwise coprimality is required. The search increments c and applies the
    two-generator membership test; termination within min(n_j, n_k) steps is
    guaranteed because n_j * n_i is always representable. The witness
    coefficients are recovered by direct search and verified exactly.
    """
    if not t.is_pairwise_coprime:
        raise NotPairwiseCoprime(f"{t.gens} is not pairwise coprime")
    n_i = t.gen(i)
    j, k = (x for x in (1, 2, 3) if x != i)
    n_j, n_k = t.gen(j), t.gen(k)
    inv = mod_inverse(n_j, n_k).value
    limit = min(n_j, n_k)
    for c in range(1, limit + 1):
        m = c * n_i
        if ((m * inv) % n_k) * n_j <= m:
            lam_j = 0
            while lam_j * n_j <= m:
                rest = m - lam_j * n_j
                if rest % n_k == 0:
                    witness = RelationWitness(c, lam_j, rest // n_k)
                    assert c * n_i == witness.lam_j * n_j + witness.lam_k * n_k
                    return witness
                lam_j += 1
            raise NotCoprime(f"no decomposition of {m} over ({n_j}, {n_k})")
    raise AssertionError(f"no relation for index {i} of {t.gens} within {limit}")
