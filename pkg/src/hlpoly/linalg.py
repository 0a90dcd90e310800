"""Exact determinants and Pfaffians over rational functions.

Matrices here are small (n <= 4 in practice), so cofactor/recursive
expansion is the right tool; no pivoting or fraction-free machinery is
needed at this scale.
"""

from __future__ import annotations

from typing import List, Sequence

from .errors import NotAntisymmetric, OddSize
from .ratfn import RatFn


class SqMatrix:
    """Dense square matrix of RatFn entries."""

    def __init__(self, entries: Sequence[Sequence]):
        self.entries: List[List[RatFn]] = [[RatFn.of(e) for e in row] for row in entries]
        self.n = len(self.entries)
        for row in self.entries:
            if len(row) != self.n:
                raise ValueError("matrix is not square")

    @staticmethod
    def build(n: int, fn) -> "SqMatrix":
        return SqMatrix([[fn(i, j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def check_antisymmetric(self) -> None:
        for i in range(self.n):
            if not self.entries[i][i].is_zero():
                raise NotAntisymmetric(f"nonzero diagonal at {i}")
            for j in range(i + 1, self.n):
                if self.entries[i][j] != -self.entries[j][i]:
                    raise NotAntisymmetric(f"A[{i}][{j}] != -A[{j}][{i}]")


def det(m: SqMatrix) -> RatFn:
    """Exact determinant by column-subset cofactor expansion."""
    n = m.n
    if n == 0:
        return RatFn(1)
    memo = {}

    def minor(rows: tuple, cols: tuple) -> RatFn:
        if len(rows) == 1:
            return m.entries[rows[0]][cols[0]]
        key = (rows, cols)
        val = memo.get(key)
        if val is not None:
            return val
        r = rows[0]
        acc = RatFn(0)
        sign = 1
        for k, c in enumerate(cols):
            e = m.entries[r][c]
            if not e.is_zero():
                sub = minor(rows[1:], cols[:k] + cols[k + 1:])
                term = e * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return minor(tuple(range(n)), tuple(range(n)))


def pfaffian(m: SqMatrix) -> RatFn:
    """Exact Pfaffian by expansion along the first row.

    Requires an antisymmetric matrix of even size; Pf(m)^2 = det(m).
    """
    if m.n % 2:
        raise OddSize(f"Pfaffian of odd size {m.n}")
    m.check_antisymmetric()

    def pf(idx: tuple) -> RatFn:
        if not idx:
            return RatFn(1)
        i0 = idx[0]
        acc = RatFn(0)
        sign = 1
        for k in range(1, len(idx)):
            j = idx[k]
            e = m.entries[i0][j]
            if not e.is_zero():
                rest = idx[1:k] + idx[k + 1:]
                term = e * pf(rest)
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        return acc

    return pf(tuple(range(m.n)))
