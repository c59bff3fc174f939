"""Closed-formula machinery for the minimal relations of a coprime triple.

For a minimal, pairwise coprime triple and any index split {i, j, k} =
{1, 2, 3}, the generator n_i satisfies the exact identity

    n_i = n_j*n_k - lam_ij*n_j - lam_ik*n_k,
    lam_ij = [-n_i * n_j^-1]_{n_k},   lam_ik = [-n_i * n_k^-1]_{n_j},

and the minimal relation c_k (least c with c*n_k representable by the other
two generators) is the minimum of an explicit finite integer sequence built
from those coefficients. `c_min_relation` evaluates that minimum eagerly;
`c_fast` is the one-term shortcut valid when its hypothesis holds. The
intermediate-semigroup operations `t_state` and `pass_map` expose the two
halves of the derivation so they can be tested independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .arith import checked_mul, mod_inverse
from .errors import IdentityViolation, NotMinimal, NotPairwiseCoprime
from .semigroup import RelationWitness, Triple

# Index schedule used when all three relations are needed: it reuses each
# modular inverse twice, so only four inverses are ever computed.
SCHEDULE = ((3, 2, 1), (3, 1, 2), (2, 1, 3))


@dataclass(frozen=True)
class LambdaPair:
    """The coefficients (lam_ij, lam_ik) of one index split of a triple.

    Invariants, checked at construction: 0 < lam_ij < n_k, 0 < lam_ik < n_j,
    the defining identity n_i = n_j*n_k - lam_ij*n_j - lam_ik*n_k holds
    exactly, and at least one coefficient sits below half its modulus.
    """

    i: int
    j: int
    k: int
    n_i: int
    n_j: int
    n_k: int
    lam_ij: int
    lam_ik: int

    def __post_init__(self) -> None:
        if sorted((self.i, self.j, self.k)) != [1, 2, 3]:
            raise ValueError(f"indices must split {{1,2,3}}, got {(self.i, self.j, self.k)}")
        if not 0 < self.lam_ij < self.n_k:
            raise IdentityViolation(f"lam_ij={self.lam_ij} outside (0, {self.n_k})")
        if not 0 < self.lam_ik < self.n_j:
            raise IdentityViolation(f"lam_ik={self.lam_ik} outside (0, {self.n_j})")
        lhs = checked_mul(self.n_j, self.n_k) - self.lam_ij * self.n_j - self.lam_ik * self.n_k
        if lhs != self.n_i:
            raise IdentityViolation(
                f"{self.n_j}*{self.n_k} - {self.lam_ij}*{self.n_j} - "
                f"{self.lam_ik}*{self.n_k} = {lhs} != {self.n_i}"
            )
        if 2 * self.lam_ij >= self.n_k and 2 * self.lam_ik >= self.n_j:
            raise IdentityViolation("both coefficients at or above half their modulus")


class MinSearchResult(NamedTuple):
    """Outcome of one bounded minimisation: the relation value c, the smallest
    index attaining it, the scan bound, and whether the one-term shortcut
    produced it."""

    c: int
    argmin_alpha: int
    bound_I: int
    via_corollary: bool


@dataclass(frozen=True)
class MinimalRelations:
    """The three minimal relations (c1, c2, c3), with optional oracle witnesses."""

    c1: int
    c2: int
    c3: int
    witnesses: tuple[RelationWitness, RelationWitness, RelationWitness] | None = None

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)


def _require_formula_input(t: Triple) -> None:
    if not t.is_pairwise_coprime:
        raise NotPairwiseCoprime(f"{t.gens} is not pairwise coprime")
    if not t.is_minimal:
        raise NotMinimal(f"{t.gens} is not a minimal generating system")


def lambda_pair(t: Triple, i: int, j: int, k: int) -> LambdaPair:
    """Compute the lambda coefficients of the split (i, j, k) of a triple."""
    _require_formula_input(t)
    n_i, n_j, n_k = t.gen(i), t.gen(j), t.gen(k)
    lam_ij = (-n_i * mod_inverse(n_j, n_k).value) % n_k
    lam_ik = (-n_i * mod_inverse(n_k, n_j).value) % n_j
    return LambdaPair(i, j, k, n_i, n_j, n_k, lam_ij, lam_ik)


def _min_scan(n_i: int, n_j: int, n_k: int, lam_ij: int, lam_ik: int) -> tuple[int, int, int]:
    # Minimum of alpha*n_j - lam_ik*floor(alpha*n_k/denom) over alpha=1..bound,
    # where denom = n_k - lam_ij and bound = ceil(lam_ik*denom/n_i).
    # Returns (minimum, first argmin, bound). Every term is positive because
    # n_j*denom - lam_ik*n_k = n_i > 0, and all loop intermediates are bounded
    # by the two products checked below, so the loop itself runs unchecked.
    denom = n_k - lam_ij
    bound = (lam_ik * denom + n_i - 1) // n_i
    checked_mul(bound, n_j)
    checked_mul(bound, n_k)
    best = 0
    best_alpha = 0
    alpha_nj = 0
    alpha_nk = 0
    for alpha in range(1, bound + 1):
        alpha_nj += n_j
        alpha_nk += n_k
        v = alpha_nj - lam_ik * (alpha_nk // denom)
        if best_alpha == 0 or v < best:
            best, best_alpha = v, alpha
    return best, best_alpha, bound


def c_min_relation(t: Triple, i: int, j: int, k: int) -> MinSearchResult:
    """Minimal relation of the generator at index k, by bounded minimisation.

    Evaluates alpha*n_j - lam_ik * floor(alpha*n_k / (n_k - lam_ij)) for
    alpha = 1..I with I = ceil(lam_ik * (n_k - lam_ij) / n_i) and returns the
    minimum. The scan is eager; ties report the smallest alpha. Note that
    n_k - lam_ij = [n_i * n_j^-1]_{n_k}, so this matches the inverse-based
    formulation exactly.
    """
    lp = lambda_pair(t, i, j, k)
    c, argmin, bound = _min_scan(lp.n_i, lp.n_j, lp.n_k, lp.lam_ij, lp.lam_ik)
    return MinSearchResult(c, argmin, bound, via_corollary=False)


def c_fast(t: Triple, i: int, j: int, k: int) -> int | None:
    """One-term shortcut for the relation at index k, when applicable.

    Returns n_j - lam_ik * floor(n_k / (n_k - lam_ij)) provided
    n_j >= lam_ik * (floor(n_k / (n_k - lam_ij)) + 1); otherwise None, and
    the caller falls back to `c_min_relation`. The hypothesis holds in
    particular whenever both lambda coefficients are below half their moduli.
    """
    lp = lambda_pair(t, i, j, k)
    q = lp.n_k // (lp.n_k - lp.lam_ij)
    if lp.n_j < lp.lam_ik * (q + 1):
        return None
    return lp.n_j - lp.lam_ik * q


def minimal_relation(t: Triple, i: int, j: int, k: int, use_fast: bool = True) -> MinSearchResult:
    """Relation at index k, preferring the shortcut and falling back to the scan."""
    if use_fast:
        fast = c_fast(t, i, j, k)
        if fast is not None:
            lp = lambda_pair(t, i, j, k)
            denom = lp.n_k - lp.lam_ij
            bound = (lp.lam_ik * denom + lp.n_i - 1) // lp.n_i
            return MinSearchResult(fast, 1, bound, via_corollary=True)
    return c_min_relation(t, i, j, k)


def minimal_relations(t: Triple) -> MinimalRelations:
    """All three minimal relations, computed under the fixed index schedule."""
    c1, c2, c3 = (c_min_relation(t, i, j, k).c for i, j, k in SCHEDULE)
    return MinimalRelations(c1, c2, c3)


def s_i_member(x: int, t: Triple, i: int, j: int, k: int) -> bool:
    """Does x * n_i lie in the semigroup generated by the other two generators?

    Decided by the remainder inequality [x * n_i * n_k^-1]_{n_j} * n_k <= x * n_i.
    The answer does not depend on which remaining index plays j versus k.
    """
    if not t.is_pairwise_coprime:
        raise NotPairwiseCoprime(f"{t.gens} is not pairwise coprime")
    if sorted((i, j, k)) != [1, 2, 3]:
        raise ValueError(f"indices must split {{1,2,3}}, got {(i, j, k)}")
    if x < 0:
        raise ValueError("membership is defined for nonnegative integers")
    n_i, n_j, n_k = t.gen(i), t.gen(j), t.gen(k)
    m = x * n_i
    return ((m * mod_inverse(n_k, n_j).value) % n_j) * n_k <= m


class TState(NamedTuple):
    """Intermediate semigroup <n_j, n_k, mid_gen> reached by trading n_i for
    mid_gen = n_j*n_k - lam_ij*n_j - n_k.

    `c_j` is the minimal relation of n_j inside that semigroup, and
    `t_k_member(alpha, beta)` decides whether x = alpha*n_j + beta (with
    0 < beta <= n_j) has x*n_k representable there.
    """

    mid_gen: int
    c_j: int
    t_k_member: Callable[[int, int], bool]


def t_state(lp: LambdaPair, t: Triple) -> TState:
    """State of the intermediate semigroup for one lambda split.

    The membership predicate evaluates the cross-multiplied inequality
    (n_k - lam_ij) * beta >= mid_gen - alpha * n_k in exact integers; beta is
    taken in (0, n_j], not [0, n_j).
    """
    if (lp.n_i, lp.n_j, lp.n_k) != (t.gen(lp.i), t.gen(lp.j), t.gen(lp.k)):
        raise ValueError("lambda pair does not belong to this triple")
    n_j, n_k = lp.n_j, lp.n_k
    denom = n_k - lp.lam_ij
    mid_gen = checked_mul(n_j, n_k) - lp.lam_ij * n_j - n_k
    # c_j = n_k - lam_ij: indeed c_j * n_j = mid_gen + n_k, and no smaller
    # multiple of n_j works by pairwise coprimality.
    c_j = denom

    def member(alpha: int, beta: int) -> bool:
        if alpha < 0 or not 0 < beta <= n_j:
            raise ValueError(f"need alpha >= 0 and 0 < beta <= {n_j}")
        return denom * beta >= mid_gen - alpha * n_k

    return TState(mid_gen, c_j, member)


def pass_map(x: int, lp: LambdaPair) -> int:
    """Map x to x - (lam_ik - 1) * [-x]_{n_j}.

    Applied to the members of the intermediate semigroup's relation set, this
    lands exactly on the relation set of the original triple; the set-level
    behaviour is what the tests assert, pointwise values are unrestricted.
    """
    return x - (lp.lam_ik - 1) * ((-x) % lp.n_j)
