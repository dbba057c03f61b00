"""Homogeneous multivariate polynomials with sparse exponent-vector storage.

A polynomial is a map from exponent tuples to nonzero field elements, all
of the same total degree.  The zero polynomial keeps an empty term map but
still carries a declared degree, so degrees always add under products.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Sequence

from .fields import Element, Field, check_same_field

Monomial = tuple  # exponent vector, one entry per variable


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree `degree`, graded-lex order
    (x0 > x1 > ...).  Length is C(degree + nvars - 1, nvars - 1)."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if nvars == 1:
        return ((degree,),)
    out = []
    for e0 in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


class HomogeneousPoly:
    """Immutable homogeneous polynomial over an exact field."""

    __slots__ = ("field", "nvars", "degree", "terms")

    def __init__(self, field: Field, nvars: int, degree: int,
                 terms: dict[Monomial, Element] | None = None):
        self.field = field
        self.nvars = nvars
        self.degree = degree
        clean: dict[Monomial, Element] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity")
            if sum(mono) != degree:
                raise ValueError(f"monomial {mono} breaks homogeneity "
                                 f"(declared degree {degree})")
            if not field.is_zero(coeff):
                clean[tuple(mono)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, nvars: int, degree: int) -> "HomogeneousPoly":
        return cls(field, nvars, degree, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, value: Element) -> "HomogeneousPoly":
        return cls(field, nvars, 0, {(0,) * nvars: value})

    @classmethod
    def one(cls, field: Field, nvars: int) -> "HomogeneousPoly":
        return cls.constant(field, nvars, field.one())

    @classmethod
    def variable(cls, field: Field, nvars: int, index: int) -> "HomogeneousPoly":
        expo = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(field, nvars, 1, {expo: field.one()})

    @classmethod
    def from_coefficients(cls, field: Field, nvars: int,
                          coeffs: Sequence[Element]) -> "HomogeneousPoly":
        """Linear form from its coefficient vector."""
        terms = {}
        for i, c in enumerate(coeffs):
            expo = tuple(1 if j == i else 0 for j in range(nvars))
            terms[expo] = c
        return cls(field, nvars, 1, terms)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, self.degree,
                     frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "HomogeneousPoly"):
        check_same_field(self.field, other.field)
        if self.nvars != other.nvars:
            raise ValueError("ambient variable counts differ")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compatible(other)
        if self.degree != other.degree:
            if self.is_zero() or other.is_zero():
                # tolerate adding a zero of a different declared degree
                return other if self.is_zero() else self
            raise ValueError("cannot add homogeneous polynomials of "
                             f"degrees {self.degree} and {other.degree}")
        f = self.field
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = f.add(terms.get(mono, f.zero()), c)
            if f.is_zero(s):
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return HomogeneousPoly(f, self.nvars, self.degree, terms)

    def __neg__(self) -> "HomogeneousPoly":
        f = self.field
        return HomogeneousPoly(f, self.nvars, self.degree,
                               {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compatible(other)
        f = self.field
        deg = self.degree + other.degree
        terms: dict[Monomial, Element] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                prod = f.mul(c1, c2)
                s = f.add(terms.get(mono, f.zero()), prod)
                if f.is_zero(s):
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return HomogeneousPoly(f, self.nvars, deg, terms)

    def scale(self, c: Element) -> "HomogeneousPoly":
        f = self.field
        return HomogeneousPoly(f, self.nvars, self.degree,
                               {m: f.mul(c, v) for m, v in self.terms.items()})

    # -- evaluation and encoding ------------------------------------------

    def evaluate(self, coords: Sequence[Element]) -> Element:
        """Exact value at the given affine representative."""
        if len(coords) != self.nvars:
            raise ValueError("coordinate dimension mismatch")
        f = self.field
        total = f.zero()
        for mono, coeff in self.terms.items():
            val = coeff
            for x, e in zip(coords, mono):
                for _ in range(e):
                    val = f.mul(val, x)
            total = f.add(total, val)
        return total

    def coefficient_vector(self) -> list[Element]:
        """Coefficients against monomials_of_degree(nvars, degree)."""
        f = self.field
        return [self.terms.get(m, f.zero())
                for m in monomials_of_degree(self.nvars, self.degree)]

    @classmethod
    def from_coefficient_vector(cls, field: Field, nvars: int, degree: int,
                                vec: Sequence[Element]) -> "HomogeneousPoly":
        basis = monomials_of_degree(nvars, degree)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector has wrong length")
        return cls(field, nvars, degree, dict(zip(basis, vec)))

    # -- text notation -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in monomials_of_degree(self.nvars, self.degree):
            if mono not in self.terms:
                continue
            coeff = self.terms[mono]
            factors = [f"x{i}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(mono) if e > 0]
            body = "*".join(factors)
            cs = str(coeff)
            if body and cs == "1":
                term = body
            elif body and cs == "-1":
                term = "-" + body
            elif body:
                term = f"{cs}*{body}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"HomogeneousPoly({self})"


_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR = re.compile(r"^(?:(?P<num>-?\d+(?:/\d+)?)|x(?P<var>\d+)(?:\^(?P<exp>\d+))?)$")


def parse_poly(text: str, field: Field, nvars: int,
               degree: int | None = None) -> HomogeneousPoly:
    """Parse plain-text notation like ``"x0^2*x1 - 3*x2^3"``.

    Coefficients are integers or rationals (``a/b``); products use ``*``,
    powers ``^``; variables are ``x0 .. x{nvars-1}``.  The result must be
    homogeneous; `degree` (when given) pins the declared degree, which is
    needed to parse "0" unambiguously.
    """
    from fractions import Fraction

    stripped = text.replace(" ", "")
    if not stripped:
        raise ValueError("empty polynomial text")
    pieces = [p for p in _TERM_SPLIT.split(stripped) if p]
    terms: dict[Monomial, Element] = {}
    term_degree: int | None = None
    f = field
    for piece in pieces:
        sign = 1
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = -1
            piece = piece[1:]
        if not piece:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = f.one()
        expo = [0] * nvars
        for factor in piece.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if m.group("num") is not None:
                q = Fraction(m.group("num"))
                val = f.mul(f.from_int(q.numerator), f.inv(f.from_int(q.denominator))) \
                    if q.denominator != 1 else f.from_int(q.numerator)
                coeff = f.mul(coeff, val)
            else:
                var = int(m.group("var"))
                if var >= nvars:
                    raise ValueError(f"variable x{var} out of range (nvars={nvars})")
                expo[var] += int(m.group("exp") or 1)
        if sign < 0:
            coeff = f.neg(coeff)
        d = sum(expo)
        if f.is_zero(coeff):
            continue
        if term_degree is None:
            term_degree = d
        elif term_degree != d:
            raise ValueError(f"inhomogeneous input {text!r}")
        mono = tuple(expo)
        s = f.add(terms.get(mono, f.zero()), coeff)
        if f.is_zero(s):
            terms.pop(mono, None)
        else:
            terms[mono] = s
    if term_degree is None:
        term_degree = degree if degree is not None else 0
    if degree is not None and terms and term_degree != degree:
        raise ValueError(f"expected degree {degree}, got {term_degree}")
    return HomogeneousPoly(field, nvars, term_degree, terms)


def poly_sum(polys: Iterable[HomogeneousPoly], field: Field, nvars: int,
             degree: int) -> HomogeneousPoly:
    total = HomogeneousPoly.zero(field, nvars, degree)
    for p in polys:
        total = total + p
    return total


def poly_product(polys: Sequence[HomogeneousPoly], field: Field,
                 nvars: int) -> HomogeneousPoly:
    """Product of a (possibly empty) list; empty product is 1."""
    total = HomogeneousPoly.one(field, nvars)
    for p in polys:
        total = total * p
    return total


def perturbation_coefficient(
        factors: Sequence[tuple[HomogeneousPoly, HomogeneousPoly]]) -> HomogeneousPoly:
    """First-order term of prod(base_i + t*direction_i) in t.

    By the product rule this is sum_j direction_j * prod_{i != j} base_i.
    Each pair must have base and direction of equal degree.
    """
    if not factors:
        raise ValueError("empty factor list")
    field = factors[0][0].field
    nvars = factors[0][0].nvars
    for base, direction in factors:
        if base.degree != direction.degree:
            raise ValueError("base and direction degrees differ")
        check_same_field(base.field, field)
    total_degree = sum(base.degree for base, _ in factors)
    # prefix[j] = prod of bases before j, suffix[j] = prod after j
    n = len(factors)
    prefix = [HomogeneousPoly.one(field, nvars)]
    for base, _ in factors[:-1]:
        prefix.append(prefix[-1] * base)
    suffix = [HomogeneousPoly.one(field, nvars)] * n
    acc = HomogeneousPoly.one(field, nvars)
    for j in range(n - 2, -1, -1):
        acc = factors[j + 1][0] * acc
        suffix[j] = acc
    result = HomogeneousPoly.zero(field, nvars, total_degree)
    for j, (_, direction) in enumerate(factors):
        if direction.is_zero():
            continue
        result = result + prefix[j] * direction * suffix[j]
    return result
