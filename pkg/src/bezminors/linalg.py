"""Dense square matrices of rationals with exact determinants and minors.

Determinants run Bareiss fraction-free elimination on an integer-scaled
copy of the matrix, so every intermediate value is an integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .poly import Number, to_rational


@dataclass(frozen=True, init=False)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Number]]):
        data = tuple(tuple(to_rational(v) for v in row) for row in rows)
        if any(len(row) != len(data) for row in data):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", data)

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def trailing(self, size: int) -> "RationalMatrix":
        """Lower-right ``size x size`` block."""
        if not 0 <= size <= self.n:
            raise ValueError(f"size {size} out of range for n={self.n}")
        k = self.n - size
        return RationalMatrix(row[k:] for row in self.rows[k:])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows)) if self.rows else self

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([-a for a in r] for r in self.rows)

    def scale(self, c: Number) -> "RationalMatrix":
        c = to_rational(c)
        return RationalMatrix([c * a for a in r] for r in self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
            for r in self.rows
        )

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def _bareiss(rows: Sequence[Sequence[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def det(m: RationalMatrix) -> Fraction:
    """Exact determinant; the empty matrix has determinant 1."""
    n = m.n
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in m.rows:
        d = lcm(*(v.denominator for v in row))
        int_rows.append([v.numerator * (d // v.denominator) for v in row])
        scale *= d
    return Fraction(_bareiss(int_rows)) / scale


def trailing_minors(m: RationalMatrix) -> list[Fraction]:
    """Determinants of the lower-right blocks; ``result[s-1]`` is the size-``s`` minor."""
    return [det(m.trailing(s)) for s in range(1, m.n + 1)]


def rank(m: RationalMatrix) -> int:
    a = m.tolist()
    n = m.n
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, n):
            f = a[i][col] / a[r][col]
            if f:
                for j in range(col, n):
                    a[i][j] -= f * a[r][j]
        r += 1
        if r == n:
            break
    return r
