"""Exact scalar arithmetic over the rationals and prime fields.

Elements are plain Python values: ``fractions.Fraction`` for the rationals
and ``int`` residues in ``[0, p)`` for a prime field.  A ``Field`` object
carries the operations; containers (polynomials, matrices) hold a field
reference and refuse to mix elements from different fields.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Union

Element = Union[Fraction, int]

#: Largest prime below 2**30; products of two residues stay well inside
#: 64-bit integer range.
DEFAULT_PRIME = 1073741789


class FieldMismatchError(ValueError):
    """Raised when an operation mixes elements of different fields."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Abstract base: exact field operations on plain element values."""

    name: str

    def zero(self) -> Element:
        raise NotImplementedError

    def one(self) -> Element:
        raise NotImplementedError

    def from_int(self, n: int) -> Element:
        raise NotImplementedError

    def add(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def sub(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def mul(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def neg(self, a: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    def is_zero(self, a: Element) -> bool:
        raise NotImplementedError

    def random(self, rng: random.Random) -> Element:
        raise NotImplementedError

    def descriptor(self) -> dict:
        """JSON-friendly description of the field."""
        raise NotImplementedError


class RationalField(Field):
    """The field Q; elements are ``Fraction`` (always in lowest terms)."""

    name = "rational"

    #: Random coefficients are drawn uniformly from [-RANDOM_BOUND, RANDOM_BOUND].
    RANDOM_BOUND = 10**4

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def random(self, rng):
        return Fraction(rng.randint(-self.RANDOM_BOUND, self.RANDOM_BOUND))

    def descriptor(self):
        return {"field": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """The field GF(p); elements are ints in ``[0, p)``."""

    name = "prime"

    def __init__(self, p: int = DEFAULT_PRIME):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inversion of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def random(self, rng):
        return rng.randrange(self.p)

    def descriptor(self):
        return {"field": "prime", "prime": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def check_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"cannot mix elements of {a!r} and {b!r}")
