"""Frobenius numbers: two-generator closed form, three-generator formulas,
gcd reduction, and a total dispatch over every admissible input.

The two formula paths compute the same value and exist to check each other:
`frobenius_altfrob` composes the result from the three minimal relations,
`frobenius_iterfrob` evaluates the whole expression in one pass, computing
its four modular inverses once up front. `frobenius_general` is the entry
point that accepts any one-to-three generators with overall gcd 1, strips
redundant generators, divides out shared pair factors, and only then applies
a formula; it can also be forced onto the brute-force oracle, or onto both
paths at once as a self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Sequence

from .arith import checked_add, checked_mul, mod_inverse
from .errors import ConsistencyError, NotCoprime, PreconditionViolated
from .relations import MinimalRelations, _min_scan, minimal_relations, _require_formula_input
from .semigroup import Triple, _member_pair, _validated_gens, frobenius_oracle, make_triple


class Method(str, Enum):
    """How a Frobenius value was produced."""

    SYLVESTER = "sylvester"
    ALTFROB = "altfrob"
    ITERFROB = "iterfrob"
    ORACLE = "oracle"


@dataclass(frozen=True)
class ReductionStep:
    """One division of a generator pair by its gcd d >= 2.

    `pair` holds the two generators before division, `untouched` the third
    one, and `reduced` the resulting positional generator list. Unwinding
    uses F(before) = d * F(after) + (d - 1) * untouched.
    """

    d: int
    pair: tuple[int, int]
    reduced: tuple[int, int, int]
    untouched: int


@dataclass(frozen=True)
class FrobeniusResult:
    """A Frobenius number plus how it was obtained.

    `value` is -1 exactly when the generators produce every nonnegative
    integer. `relations` is populated only when the dispatch ended on a
    pairwise coprime minimal triple with no reduction steps, since the
    relations of a reduced triple are not those of the input.
    """

    value: int
    method: Method
    relations: MinimalRelations | None
    reduction_trace: tuple[ReductionStep, ...]


def sylvester(a: int, b: int) -> int:
    """a*b - a - b for coprime a, b >= 1; equals -1 when either equals 1."""
    if a < 1 or b < 1:
        raise ValueError(f"generators must be positive, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)} > 1")
    return checked_mul(a, b) - a - b


def frobenius_altfrob(t: Triple) -> FrobeniusResult:
    """Frobenius number assembled from the three minimal relations.

    F = c1*n1 + max([c2*n2*n3^-1]_{n1} * n3, [c3*n3*n2^-1]_{n1} * n2)
        - n1 - n2 - n3
    for a pairwise coprime minimal triple n1 > n2 > n3 > 1.
    """
    _require_formula_input(t)
    rels = minimal_relations(t)
    n1, n2, n3 = t.gens
    inv3 = mod_inverse(n3, n1).value
    inv2 = mod_inverse(n2, n1).value
    term2 = checked_mul((checked_mul(rels.c2, n2) * inv3) % n1, n3)
    term3 = checked_mul((checked_mul(rels.c3, n3) * inv2) % n1, n2)
    value = checked_mul(rels.c1, n1) + max(term2, term3) - n1 - n2 - n3
    return FrobeniusResult(value, Method.ALTFROB, rels, ())


def frobenius_iterfrob(t: Triple) -> FrobeniusResult:
    """Frobenius number as a single expression over four shared inverses.

    Computes n2^-1 and n3^-1 modulo n1, and n1^-1 modulo n2 and n3, once;
    derives the lambda coefficients for the relation schedule from them; runs
    the three bounded minimisations; and assembles the same combination as
    `frobenius_altfrob`. The two paths agree exactly on every input.
    """
    _require_formula_input(t)
    n1, n2, n3 = t.gens
    inv_2_mod_1 = mod_inverse(n2, n1).value
    inv_3_mod_1 = mod_inverse(n3, n1).value
    inv_1_mod_2 = mod_inverse(n1, n2).value
    inv_1_mod_3 = mod_inverse(n1, n3).value

    # c1 from split (i, j, k) = (3, 2, 1)
    c1, _, _ = _min_scan(n3, n2, n1, (-n3 * inv_2_mod_1) % n1, (-n3 * inv_1_mod_2) % n2)
    # c2 from split (3, 1, 2)
    c2, _, _ = _min_scan(n3, n1, n2, (-n3 * inv_1_mod_2) % n2, (-n3 * inv_2_mod_1) % n1)
    # c3 from split (2, 1, 3)
    c3, _, _ = _min_scan(n2, n1, n3, (-n2 * inv_1_mod_3) % n3, (-n2 * inv_3_mod_1) % n1)

    term2 = checked_mul((checked_mul(c2, n2) * inv_3_mod_1) % n1, n3)
    term3 = checked_mul((checked_mul(c3, n3) * inv_2_mod_1) % n1, n2)
    value = checked_mul(c1, n1) + max(term2, term3) - n1 - n2 - n3
    return FrobeniusResult(value, Method.ITERFROB, MinimalRelations(c1, c2, c3), ())


def _representable(m: int, others: Sequence[int]) -> bool:
    if len(others) == 1:
        return m % others[0] == 0
    return _member_pair(m, others[0], others[1])


def _drop_redundant(gens: Sequence[int]) -> list[int]:
    # Remove any generator representable by the remaining ones, repeating
    # until stable. Scanning largest-first keeps the outcome deterministic.
    gs = sorted(gens, reverse=True)
    changed = True
    while changed and len(gs) > 1:
        changed = False
        for idx in range(len(gs)):
            rest = gs[:idx] + gs[idx + 1:]
            if _representable(gs[idx], rest):
                del gs[idx]
                changed = True
                break
    return gs


def reduce_non_coprime(gens: Sequence[int]) -> tuple[ReductionStep, tuple[int, int, int]] | None:
    """Divide the first generator pair sharing a factor d >= 2 by d.

    Expects three generators forming a minimal system with overall gcd 1
    (PreconditionViolated otherwise). Pairs are tried in the fixed order
    (n1,n2), (n1,n3), (n2,n3) of the descending sort; the three pairwise gcds
    are mutually coprime, so the final result does not depend on this order,
    only the trace does. Returns None when already pairwise coprime.
    """
    gs = sorted(gens, reverse=True)
    if len(gs) != 3:
        raise ValueError(f"expected exactly 3 generators, got {len(gs)}")
    if gcd(gcd(gs[0], gs[1]), gs[2]) != 1:
        raise PreconditionViolated(f"gcd{tuple(gs)} > 1")
    for m, others in ((gs[i], gs[:i] + gs[i + 1:]) for i in range(3)):
        if _representable(m, others):
            raise PreconditionViolated(f"{m} is redundant in {tuple(gs)}")
    for a_pos, b_pos in ((0, 1), (0, 2), (1, 2)):
        d = gcd(gs[a_pos], gs[b_pos])
        if d >= 2:
            reduced = list(gs)
            reduced[a_pos] //= d
            reduced[b_pos] //= d
            untouched = gs[3 - a_pos - b_pos]
            step = ReductionStep(d, (gs[a_pos], gs[b_pos]), tuple(reduced), untouched)
            return step, step.reduced
    return None


def _formula_dispatch(gens: Sequence[int], leaf: str) -> tuple[int, MinimalRelations | None, list[ReductionStep], Method]:
    gs = _drop_redundant(gens)
    if len(gs) == 1:
        # overall gcd 1 forces the single generator to be 1
        return -1, None, [], Method.SYLVESTER
    if len(gs) == 2:
        return sylvester(gs[0], gs[1]), None, [], Method.SYLVESTER
    red = reduce_non_coprime(gs)
    if red is None:
        t = make_triple(*gs)
        res = frobenius_altfrob(t) if leaf == "altfrob" else frobenius_iterfrob(t)
        return res.value, res.relations, [], res.method
    step, reduced = red
    inner, _, trace, tag = _formula_dispatch(reduced, leaf)
    value = checked_add(checked_mul(step.d, inner), checked_mul(step.d - 1, step.untouched))
    return value, None, [step, *trace], tag


def frobenius_general(gens: Iterable[int], method: str = "iterfrob") -> FrobeniusResult:
    """Frobenius number of one to three generators with overall gcd 1.

    Dispatch: a lone generator must be 1 (value -1); two generators use the
    closed two-generator form; three generators are first stripped of any
    generator representable by the other two, then repeatedly reduced by
    shared pair factors (re-stripping at every level), and the remaining
    pairwise coprime minimal triple goes through the requested formula.

    `method` selects "iterfrob" (default), "altfrob", "oracle", or "both";
    "both" runs the formula path and the brute-force oracle and raises
    ConsistencyError if they ever disagree.
    """
    gs = _validated_gens(gens)
    meth = str(method)
    if meth not in ("iterfrob", "altfrob", "oracle", "both"):
        raise ValueError(f"unknown method {method!r}")
    if meth == "oracle":
        return FrobeniusResult(frobenius_oracle(gs), Method.ORACLE, None, ())
    leaf = "altfrob" if meth == "altfrob" else "iterfrob"
    value, rels, trace, tag = _formula_dispatch(gs, leaf)
    if meth == "both":
        reference = frobenius_oracle(gs)
        if reference != value:
            raise ConsistencyError(
                f"formula gives {value} but oracle gives {reference} for {tuple(gs)}"
            )
    return FrobeniusResult(value, tag, rels, tuple(trace))
