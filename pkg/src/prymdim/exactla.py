"""Exact rational linear algebra.

Rationals are stdlib ``fractions.Fraction`` (arbitrary precision).
Determinants and solves go through fraction-free Bareiss elimination on
the integer matrix obtained by clearing denominators, so no rounding
ever occurs and intermediate entries stay single integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import NotSquare, Singular

BigRational = Fraction


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(Fraction(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    def at(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]


def _cleared_int_rows(A: RationalMatrix, b: Sequence[Fraction] | None):
    """Scale each row by the lcm of its denominators; return int rows + scales."""
    rows = []
    scales = []
    for r in range(A.rows):
        vals = list(A.row(r))
        if b is not None:
            vals.append(Fraction(b[r]))
        m = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * m) for v in vals])
        scales.append(m)
    return rows, scales


def determinant(A: RationalMatrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination."""
    if A.rows != A.cols:
        raise NotSquare(f"{A.rows}x{A.cols} matrix has no determinant")
    n = A.rows
    if n == 0:
        return Fraction(1)
    m, scales = _cleared_int_rows(A, None)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi, mk = m[i], m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    det = Fraction(sign * m[n - 1][n - 1])
    for s in scales:
        det /= s
    return det


def solve(A: RationalMatrix, b: Sequence) -> list[Fraction]:
    """Exact solution of A x = b for square nonsingular A.

    The solution is verified by back-multiplication before being
    returned; failure there would indicate a bug, not bad input.
    """
    if A.rows != A.cols:
        raise NotSquare(f"cannot solve {A.rows}x{A.cols} system")
    n = A.rows
    bf = [Fraction(x) for x in b]
    if len(bf) != n:
        raise ValueError("right-hand side length mismatch")
    if n == 0:
        return []
    m, _ = _cleared_int_rows(A, bf)  # augmented, row scaling preserves solutions
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise Singular("zero pivot column")
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi, mk = m[i], m[k]
            for j in range(k + 1, n + 1):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    if m[n - 1][n - 1] == 0:
        raise Singular("zero final pivot")
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for j in range(i + 1, n):
            s -= m[i][j] * x[j]
        x[i] = s / m[i][i]
    for r in range(n):  # exactness check
        got = sum((A.at(r, c) * x[c] for c in range(n)), Fraction(0))
        assert got == bf[r], "solve verification failed"
    return x


def mat_vec(A: RationalMatrix, x: Sequence) -> list[Fraction]:
    xs = [Fraction(v) for v in x]
    if len(xs) != A.cols:
        raise ValueError("dimension mismatch")
    return [
        sum((A.at(r, c) * xs[c] for c in range(A.cols)), Fraction(0))
        for r in range(A.rows)
    ]
