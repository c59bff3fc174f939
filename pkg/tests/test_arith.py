from hypothesis import given, strategies as st
import pytest

from nsg import (
    BothZero,
    InvalidModulus,
    NotCoprime,
    Overflow,
    Residue,
    checked_add,
    checked_mul,
    ext_gcd,
    mod_inverse,
    mod_reduce,
)
from nsg.arith import INT_MAX, INT_MIN


@pytest.mark.parametrize("m,n,expected", [(231, 12, 3), (-77, 12, 7), (0, 5, 0)])
def test_mod_reduce_examples(m, n, expected):
    r = mod_reduce(m, n)
    assert r.value == expected
    assert r.modulus == n
    assert int(r) == expected


@pytest.mark.parametrize("n", [0, -1, -12])
def test_mod_reduce_rejects_bad_modulus(n):
    with pytest.raises(InvalidModulus):
        mod_reduce(5, n)


@given(st.integers(-10**12, 10**12), st.integers(1, 10**6))
def test_mod_reduce_is_a_congruent_least_residue(m, n):
    r = mod_reduce(m, n)
    assert 0 <= r.value < n
    assert (m - r.value) % n == 0


@given(st.integers(-10**9, 10**9), st.integers(1, 10**5))
def test_mod_reduce_negation(x, n):
    neg = mod_reduce(-x, n).value
    if x % n == 0:
        assert neg == 0
    else:
        assert neg == n - mod_reduce(x, n).value


def test_ext_gcd_examples():
    g, x, y = ext_gcd(12, 7)
    assert g == 1 and 12 * x + 7 * y == 1
    assert ext_gcd(4, 6)[0] == 2
    assert ext_gcd(5, 0) == (5, 1, 0)


def test_ext_gcd_rejects_bad_input():
    with pytest.raises(BothZero):
        ext_gcd(0, 0)
    with pytest.raises(ValueError):
        ext_gcd(-3, 5)


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_ext_gcd_bezout(a, b):
    if a == 0 and b == 0:
        return
    g, x, y = ext_gcd(a, b)
    assert g > 0
    assert a % g == 0 and b % g == 0
    assert a * x + b * y == g


def test_mod_inverse_examples():
    assert mod_inverse(1, 5).value == 1
    inv = mod_inverse(7, 12).value
    assert 7 * inv % 12 == 1  # independent check: 7*7 = 49 = 48 + 1
    assert inv == 7
    with pytest.raises(NotCoprime):
        mod_inverse(4, 6)
    with pytest.raises(InvalidModulus):
        mod_inverse(3, 1)


@given(st.integers(-10**6, 10**6), st.integers(2, 10**4))
def test_mod_inverse_property(a, n):
    from math import gcd

    if gcd(a % n, n) != 1:
        with pytest.raises(NotCoprime):
            mod_inverse(a, n)
        return
    u = mod_inverse(a, n)
    assert 0 <= u.value < n
    assert (a * u.value) % n == 1


def test_checked_ops():
    assert checked_mul(2, 3) == 6
    assert checked_mul(0, INT_MAX) == 0
    assert checked_add(2, 3) == 5
    with pytest.raises(Overflow):
        checked_mul(INT_MAX, INT_MAX)
    with pytest.raises(Overflow):
        checked_add(INT_MAX, 1)
    with pytest.raises(Overflow):
        checked_add(INT_MIN, -1)
    with pytest.raises(Overflow):
        checked_mul(INT_MIN, -1)
    # the extremes themselves are representable
    assert checked_add(INT_MAX, 0) == INT_MAX
    assert checked_mul(INT_MIN, 1) == INT_MIN


def test_residue_validation():
    with pytest.raises(InvalidModulus):
        Residue(3, 3)
    with pytest.raises(InvalidModulus):
        Residue(-1, 3)
    with pytest.raises(InvalidModulus):
        Residue(0, 0)
