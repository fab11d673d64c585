"""Dense linear algebra over GF(2) with bit-packed rows.

Matrices are stored one Python integer per row; bit ``j`` of row ``i`` is
entry ``(i, j)``.  Word-parallel XOR makes elimination cheap even at the
millions-of-solves scale of the Monte Carlo workload.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class Gf2Vector:
    """Length-``n`` vector over GF(2), packed into one integer."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vector dimension must be positive")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("bits outside the vector's range")

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "Gf2Vector":
        bits = 0
        for i, e in enumerate(entries):
            if e not in (0, 1):
                raise ValueError("entries must be 0 or 1")
            bits |= e << i
        return cls(len(entries), bits)

    def entries(self) -> tuple:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def weight(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class Gf2Matrix:
    """Square ``n x n`` matrix over GF(2), one bit-packed integer per row."""

    n: int
    rows: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix dimension must be positive")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match dimension")
        for r in self.rows:
            if not 0 <= r < (1 << self.n):
                raise ValueError("row has bits outside the matrix")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            bits = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                bits |= e << j
            rows.append(bits)
        return cls(n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return Gf2Matrix(self.n, tuple(cols))

    def mul_vector(self, v: Gf2Vector) -> Gf2Vector:
        if v.n != self.n:
            raise ValueError("dimension mismatch")
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r & v.bits).bit_count() & 1) << i
        return Gf2Vector(self.n, bits)


def rank_of_rows(rows) -> int:
    """GF(2) rank of an iterable of bit-packed rows (rows are not mutated)."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            b = row.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = row
                rank += 1
                break
            row ^= p
    return rank


def rank(m: Gf2Matrix) -> int:
    """Row rank of ``m`` over GF(2)."""
    return rank_of_rows(m.rows)


def is_invertible(m: Gf2Matrix) -> bool:
    return rank_of_rows(m.rows) == m.n


def solve(m: Gf2Matrix, b: Gf2Vector) -> Optional[Gf2Vector]:
    """Some ``x`` with ``m @ x = b`` over GF(2), or ``None`` if inconsistent.

    When the system is underdetermined, free variables are set to 0, so the
    output is deterministic.  Inputs are never mutated.
    """
    if b.n != m.n:
        raise ValueError("dimension mismatch")
    n = m.n
    rows = list(m.rows)
    rhs = [(b.bits >> i) & 1 for i in range(n)]

    # Reduced row echelon form, eliminating column by column.
    pivot_cols = []
    r = 0
    for col in range(n):
        piv = None
        for k in range(r, n):
            if (rows[k] >> col) & 1:
                piv = k
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        for k in range(n):
            if k != r and (rows[k] >> col) & 1:
                rows[k] ^= rows[r]
                rhs[k] ^= rhs[r]
        pivot_cols.append(col)
        r += 1

    for k in range(r, n):
        if rhs[k]:
            return None

    x = 0
    for i, col in enumerate(pivot_cols):
        x |= rhs[i] << col
    return Gf2Vector(n, x)
