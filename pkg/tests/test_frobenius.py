import pytest

from nsg import (
    ConsistencyError,
    GENERATOR_LIMIT,
    Method,
    NotCoprime,
    NotCoprimeOverall,
    NotMinimal,
    NotPairwiseCoprime,
    Overflow,
    PreconditionViolated,
    frobenius_altfrob,
    frobenius_general,
    frobenius_iterfrob,
    frobenius_oracle,
    gaps,
    make_triple,
    mod_inverse,
    reduce_non_coprime,
    sylvester,
)
from conftest import descending_triples, naive_frobenius, pairwise_coprime


# ----------------------------------------------------------------------
# sylvester
# ----------------------------------------------------------------------

def test_sylvester_examples():
    assert sylvester(5, 7) == 23
    assert sylvester(2, 3) == 1
    assert sylvester(1, 9) == -1
    with pytest.raises(NotCoprime):
        sylvester(4, 6)
    with pytest.raises(ValueError):
        sylvester(0, 3)


def test_sylvester_overflow_is_clean():
    big = 1 << 33
    with pytest.raises(Overflow):
        sylvester(big, big + 1)


# ----------------------------------------------------------------------
# the two formula paths
# ----------------------------------------------------------------------

def test_altfrob_pinned_examples():
    r = frobenius_altfrob(make_triple(12, 11, 7))
    assert r.value == 27
    assert r.relations.as_tuple() == (3, 3, 5)
    assert r.method is Method.ALTFROB
    assert frobenius_altfrob(make_triple(5, 4, 3)).value == 2
    assert frobenius_altfrob(make_triple(7, 5, 3)).value == 4


def test_altfrob_5_4_3_composition():
    # inner terms: [c2*n2*n3^-1]_{n1}*n3 = 3 and [c3*n3*n2^-1]_{n1}*n2 = 4
    r = frobenius_altfrob(make_triple(5, 4, 3))
    c1, c2, c3 = r.relations.as_tuple()
    assert (c1, c2, c3) == (2, 2, 3)
    t2 = ((c2 * 4 * mod_inverse(3, 5).value) % 5) * 3
    t3 = ((c3 * 3 * mod_inverse(4, 5).value) % 5) * 4
    assert (t2, t3) == (3, 4)
    assert r.value == c1 * 5 + max(t2, t3) - 5 - 4 - 3 == 2


def test_formula_guards():
    with pytest.raises(NotPairwiseCoprime):
        frobenius_altfrob(make_triple(6, 5, 4))
    with pytest.raises(NotMinimal):
        frobenius_iterfrob(make_triple(17, 12, 5))


def test_iterfrob_equals_altfrob_and_oracle_small():
    for trip in descending_triples(50):
        if not pairwise_coprime(*trip):
            continue
        t = make_triple(*trip)
        if not t.is_minimal:
            continue
        a = frobenius_altfrob(t)
        b = frobenius_iterfrob(t)
        assert a.value == b.value, trip
        assert a.relations.as_tuple() == b.relations.as_tuple(), trip
        assert b.value == frobenius_oracle(trip), trip


def test_relations_reassemble_to_value():
    # feeding iterfrob's relations through the composition reproduces F
    for trip in [(12, 11, 7), (10, 9, 7), (23, 19, 17), (101, 97, 89), (35, 22, 9)]:
        t = make_triple(*trip)
        r = frobenius_iterfrob(t)
        c1, c2, c3 = r.relations.as_tuple()
        n1, n2, n3 = t.gens
        t2 = ((c2 * n2 * mod_inverse(n3, n1).value) % n1) * n3
        t3 = ((c3 * n3 * mod_inverse(n2, n1).value) % n1) * n2
        assert c1 * n1 + max(t2, t3) - n1 - n2 - n3 == r.value


# ----------------------------------------------------------------------
# reduce_non_coprime
# ----------------------------------------------------------------------

def test_reduce_examples():
    step, reduced = reduce_non_coprime((6, 5, 4))
    assert step.d == 2 and step.pair == (6, 4) and step.untouched == 5
    assert reduced == (3, 5, 2)

    step, reduced = reduce_non_coprime((9, 6, 4))
    assert step.d == 3 and step.pair == (9, 6) and step.untouched == 4
    assert reduced == (3, 2, 4)

    assert reduce_non_coprime((12, 11, 7)) is None


def test_reduce_preconditions():
    with pytest.raises(PreconditionViolated):
        reduce_non_coprime((12, 6, 4))  # overall gcd 2
    with pytest.raises(PreconditionViolated):
        reduce_non_coprime((10, 5, 3))  # 10 = 2 * 5 is redundant


# ----------------------------------------------------------------------
# frobenius_general
# ----------------------------------------------------------------------

def test_general_dispatch_cases():
    r = frobenius_general([20, 14, 9])
    assert r.value == 53
    assert r.relations is None
    assert len(r.reduction_trace) == 1
    step = r.reduction_trace[0]
    assert (step.d, step.pair, step.untouched) == (2, (20, 14), 9)
    # unwinding: the reduced triple is pairwise coprime
    assert step.reduced == (10, 7, 9)
    assert r.value == 2 * frobenius_oracle([10, 7, 9]) + 9
    assert naive_frobenius((20, 14, 9)) == 53

    assert frobenius_general([2, 3, 5]).value == 1
    assert frobenius_general([2, 3, 5]).method is Method.SYLVESTER
    assert frobenius_general([1, 7, 11]).value == -1
    assert frobenius_general([1]).value == -1
    assert frobenius_general([7, 5]).value == 23


def test_general_chain_of_two_reductions():
    # (12, 10, 15): gcd(12,10)=2 then gcd on the next level
    gens = [12, 10, 15]
    r = frobenius_general(gens)
    assert r.value == frobenius_oracle(gens) == naive_frobenius(tuple(gens))
    assert len(r.reduction_trace) >= 1


def test_general_input_validation():
    with pytest.raises(NotCoprimeOverall):
        frobenius_general([2, 4, 6])
    with pytest.raises(ValueError):
        frobenius_general([])
    with pytest.raises(ValueError):
        frobenius_general([5, 7], method="nonsense")
    with pytest.raises(Overflow):
        frobenius_general([GENERATOR_LIMIT + 1, 2])


def test_general_methods():
    assert frobenius_general([12, 11, 7], method="oracle").method is Method.ORACLE
    assert frobenius_general([12, 11, 7], method="altfrob").method is Method.ALTFROB
    both = frobenius_general([12, 11, 7], method="both")
    assert both.value == 27 and both.method is Method.ITERFROB
    assert frobenius_general([20, 14, 9], method="both").value == 53


def test_general_handles_duplicates():
    assert frobenius_general([5, 5, 3]).value == sylvester(5, 3) == 7


def test_general_equals_oracle_exhaustive_small():
    for trip in descending_triples(60):
        assert frobenius_general(trip).value == frobenius_oracle(trip), trip


def test_reduction_unwinding_against_oracle():
    # every recorded step satisfies F(before) = d * F(after) + (d-1) * untouched
    # with both sides checked against the brute-force oracle
    seen = 0
    for trip in descending_triples(40):
        r = frobenius_general(trip)
        if not r.reduction_trace:
            continue
        seen += 1
        level = list(trip)
        for step in r.reduction_trace:
            before = frobenius_oracle(level)
            after = frobenius_oracle(step.reduced)
            assert before == step.d * after + (step.d - 1) * step.untouched, (trip, step)
            level = list(step.reduced)
    assert seen > 100


def test_frobenius_is_last_gap_with_members_above():
    # F itself is not representable; everything above it is
    import random

    rng = random.Random(1)
    pool = [t for t in descending_triples(60)]
    for trip in rng.sample(pool, 80):
        frob = frobenius_general(trip).value
        gap_set = set(gaps(trip))
        assert frob in gap_set
        assert max(gap_set) == frob
        for m in range(frob + 1, frob + 2 * trip[2] + 1):
            assert m not in gap_set


def test_boundary_triple_runs_without_overflow():
    # largest admissible generators: three consecutive values are pairwise
    # coprime, and the formula path must stay inside the checked window
    top = GENERATOR_LIMIT
    t = make_triple(top, top - 1, top - 2)
    assert t.is_pairwise_coprime and t.is_minimal
    a = frobenius_altfrob(t)
    b = frobenius_iterfrob(t)
    assert a.value == b.value
    assert 0 < a.value < top * top
    c1, c2, c3 = a.relations.as_tuple()
    assert 1 < c1 <= top - 1 and 1 < c2 <= top and 1 < c3 <= top


def test_method_both_cross_check_wiring(monkeypatch):
    import nsg.frobenius as fr

    monkeypatch.setattr(fr, "frobenius_oracle", lambda gens: -999)
    with pytest.raises(ConsistencyError):
        fr.frobenius_general([12, 11, 7], method="both")
