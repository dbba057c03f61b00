"""Dense exact matrices and rank computation.

Rank over the rationals uses fraction-free (Bareiss) elimination on an
integer matrix obtained by clearing denominators row by row; intermediate
entries stay bounded by minors of the scaled matrix.  Rank over a prime
field uses ordinary Gaussian elimination mod p.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .fields import Element, Field, FieldMismatchError, PrimeField, RationalField


class ExactMatrix:
    """Immutable row-major matrix of exact field elements."""

    def __init__(self, field: Field, rows: Sequence[Sequence[Element]],
                 ncols: int | None = None):
        self.field = field
        self.nrows = len(rows)
        if self.nrows:
            self.ncols = len(rows[0])
            for r in rows:
                if len(r) != self.ncols:
                    raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols
        self.rows = tuple(tuple(r) for r in rows)

    def transpose(self) -> "ExactMatrix":
        cols = [[self.rows[r][c] for r in range(self.nrows)]
                for c in range(self.ncols)]
        return ExactMatrix(self.field, cols, ncols=self.nrows)

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        if isinstance(self.field, PrimeField):
            return _rank_mod_p([list(r) for r in self.rows], self.field.p)
        if isinstance(self.field, RationalField):
            return _rank_bareiss([_clear_denominators(r) for r in self.rows])
        raise FieldMismatchError(f"unsupported field {self.field!r}")

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field!r})"


def _clear_denominators(row: Sequence[Fraction]) -> list[int]:
    scale = lcm(*(f.denominator for f in row)) if row else 1
    return [int(f * scale) for f in row]


def _rank_bareiss(m: list[list[int]]) -> int:
    """Fraction-free elimination; pivot = first nonzero entry, lowest row."""
    nr, nc = len(m), len(m[0])
    prev = 1
    row = 0
    for col in range(nc):
        if row >= nr:
            break
        piv = next((r for r in range(row, nr) if m[r][col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        pval = m[row][col]
        for r in range(row + 1, nr):
            mrc = m[r][col]
            if mrc == 0 and pval == prev:
                continue
            mr, mrow = m[r], m[row]
            for c in range(col + 1, nc):
                # exact by Sylvester's identity
                mr[c] = (mr[c] * pval - mrc * mrow[c]) // prev
            mr[col] = 0
        prev = pval
        row += 1
    return row


def _rank_mod_p(m: list[list[int]], p: int) -> int:
    nr, nc = len(m), len(m[0])
    row = 0
    for col in range(nc):
        if row >= nr:
            break
        piv = next((r for r in range(row, nr) if m[r][col] % p != 0), None)
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], -1, p)
        mrow = [x * inv % p for x in m[row]]
        m[row] = mrow
        for r in range(row + 1, nr):
            f = m[r][col] % p
            if f:
                mr = m[r]
                for c in range(col, nc):
                    mr[c] = (mr[c] - f * mrow[c]) % p
        row += 1
    return row
