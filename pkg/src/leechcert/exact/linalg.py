"""Fraction-free exact linear solving over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence


class SingularMatrix(ArithmeticError):
    """Raised when a square system has zero determinant."""


def _integer_rows(A: Sequence[Sequence], b: Sequence) -> List[List[int]]:
    rows = []
    for row, rhs in zip(A, b):
        vals = [Fraction(v) for v in row] + [Fraction(rhs)]
        den = lcm(*(v.denominator for v in vals))
        rows.append([int(v * den) for v in vals])
    return rows


def solve_linear_system(A: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Unique solution of ``A x = b`` by Bareiss elimination.

    Each row is first scaled to integers; all eliminations stay in the
    integers and the only divisions are the exact Bareiss quotients and
    the final back substitution.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if len(b) != n:
        raise ValueError("right-hand side has wrong length")
    if n == 0:
        return []
    M = _integer_rows(A, b)
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if M[r][k] != 0), None)
        if piv is None:
            raise SingularMatrix(f"no pivot in column {k}")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(M[i][n])
        for j in range(i + 1, n):
            acc -= M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x


def determinant(A: Sequence[Sequence]) -> Fraction:
    n = len(A)
    if n == 0:
        return Fraction(1)
    M = [[Fraction(v) for v in row] for row in A]
    den = 1
    for row in M:
        den *= lcm(*(v.denominator for v in row))
    Mi = [[int(v * lcm(*(w.denominator for w in row))) for v in row] for row in M]
    sign, prev = 1, 1
    for k in range(n):
        piv = next((r for r in range(k, n) if Mi[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            Mi[k], Mi[piv] = Mi[piv], Mi[k]
            sign = -sign
        pk = Mi[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                Mi[i][j] = (Mi[i][j] * pk - Mi[i][k] * Mi[k][j]) // prev
            Mi[i][k] = 0
        prev = pk
    return Fraction(sign * Mi[n - 1][n - 1], den)


def mat_vec(A: Sequence[Sequence], x: Sequence) -> List[Fraction]:
    return [sum((Fraction(a) * v for a, v in zip(row, x)), Fraction(0)) for row in A]
