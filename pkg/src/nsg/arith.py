"""Exact integer kernel: Euclidean remainders, extended gcd, modular inverses.

Everything here is plain integer arithmetic, no floating point anywhere.
The package works inside a signed 64-bit window: `checked_mul`/`checked_add`
reject any result outside it, and `GENERATOR_LIMIT` bounds the admissible
generators so that products of three generator-scale quantities always fit.
Python integers never wrap, so the window is a contract (portability and a
guard against runaway values), not a memory-safety issue.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BothZero, InvalidModulus, NotCoprime, Overflow

INT_MIN = -(1 << 63)
INT_MAX = (1 << 63) - 1

# Largest admissible generator: (2**21 - 1)**3 < 2**63, so n1*n2*n3 and every
# intermediate of the closed formulas stays inside the window.
GENERATOR_LIMIT = (1 << 21) - 1


@dataclass(frozen=True)
class Residue:
    """A least nonnegative residue: 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidModulus(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise InvalidModulus(
                f"residue {self.value} outside [0, {self.modulus})"
            )

    def __int__(self) -> int:
        return self.value


def mod_reduce(m: int, n: int) -> Residue:
    """Euclidean remainder of m modulo n, for any integer m and n >= 1.

    Python's % operator already returns the least nonnegative residue for a
    positive modulus, so in particular (-x) % n == n - x % n when n does not
    divide x.
    """
    if n < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {n}")
    return Residue(m % n, n)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid on nonnegative a, b: returns (g, x, y) with a*x + b*y = g."""
    if a < 0 or b < 0:
        raise ValueError("ext_gcd requires nonnegative arguments")
    if a == 0 and b == 0:
        raise BothZero("gcd(0, 0) is undefined")
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inverse(a: int, n: int) -> Residue:
    """Multiplicative inverse of a modulo n >= 2, via extended Euclid.

    The modulus need not be prime; gcd(a, n) = 1 is required and violation
    raises NotCoprime (typically a sign the caller's generators are not
    pairwise coprime).
    """
    if n < 2:
        raise InvalidModulus(f"inverse needs modulus >= 2, got {n}")
    r = a % n
    g, x, _ = ext_gcd(r, n)
    if g != 1:
        raise NotCoprime(f"{a} has no inverse modulo {n} (gcd {g})")
    return Residue(x % n, n)


def checked_add(a: int, b: int) -> int:
    """a + b, raising Overflow if the exact sum leaves the 64-bit window."""
    s = a + b
    if s < INT_MIN or s > INT_MAX:
        raise Overflow(f"{a} + {b} exceeds the 64-bit integer window")
    return s


def checked_mul(a: int, b: int) -> int:
    """a * b, raising Overflow if the exact product leaves the 64-bit window."""
    p = a * b
    if p < INT_MIN or p > INT_MAX:
        raise Overflow(f"{a} * {b} exceeds the 64-bit integer window")
    return p
