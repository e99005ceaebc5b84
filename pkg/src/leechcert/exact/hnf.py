"""Hermite normal form of integer lattices and sublattice indices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

import numpy as np


class RankDeficient(ValueError):
    """Generators do not span a full-rank lattice."""


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class _Echelon:
    """Row-style Hermite basis built by incremental insertion."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, List[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def insert(self, v: Sequence[int]) -> bool:
        """Add ``v`` to the lattice; return True if the lattice grew."""
        v = [int(x) for x in v]
        grew = False
        for c in range(self.ncols):
            if v[c] == 0:
                continue
            h = self.rows.get(c)
            if h is None:
                if v[c] < 0:
                    v = [-x for x in v]
                self.rows[c] = v
                grew = True
                break
            if v[c] % h[c] == 0:
                q = v[c] // h[c]
                v = [x - q * y for x, y in zip(v, h)]
                continue
            g, a, b = _xgcd(h[c], v[c])
            hc, vc = h[c] // g, v[c] // g
            new_h = [a * x + b * y for x, y in zip(h, v)]
            v = [hc * y - vc * x for x, y in zip(h, v)]
            self.rows[c] = new_h
            grew = True
        if grew:
            self._reduce()
        return grew

    def _reduce(self):
        cols = sorted(self.rows)
        for c in cols:
            h = self.rows[c]
            if h[c] < 0:
                h = [-x for x in h]
                self.rows[c] = h
            for c2 in cols:
                if c2 >= c:
                    break
                r = self.rows[c2]
                q = r[c] // h[c]
                if q:
                    self.rows[c2] = [x - q * y for x, y in zip(r, h)]

    def contains(self, v: Sequence[int]) -> bool:
        v = [int(x) for x in v]
        for c in range(self.ncols):
            if v[c] == 0:
                continue
            h = self.rows.get(c)
            if h is None or v[c] % h[c]:
                return False
            q = v[c] // h[c]
            v = [x - q * y for x, y in zip(v, h)]
        return True

    def basis(self) -> List[List[int]]:
        return [list(self.rows[c]) for c in sorted(self.rows)]


@dataclass(frozen=True)
class HNFResult:
    basis: tuple
    rank: int
    ncols: int

    @property
    def full_rank(self) -> bool:
        return self.rank == self.ncols

    @property
    def determinant(self) -> Optional[int]:
        """Covolume of the lattice in the integer coordinates (product of pivots)."""
        if not self.full_rank:
            return None
        out = 1
        for i, row in enumerate(self.basis):
            out *= row[i]
        return out

    def contains(self, v: Sequence[int]) -> bool:
        ech = _Echelon(self.ncols)
        for row in self.basis:
            piv = next(i for i, x in enumerate(row) if x)
            ech.rows[piv] = list(row)
        return ech.contains(v)

    def index_in(self, ambient: "HNFResult") -> int:
        """Index of this lattice inside ``ambient``; both must be full rank."""
        if not (self.full_rank and ambient.full_rank):
            raise RankDeficient("index needs full-rank lattices")
        for row in self.basis:
            if not ambient.contains(row):
                raise ValueError("lattice is not contained in the ambient lattice")
        q = Fraction(abs(self.determinant), abs(ambient.determinant))
        assert q.denominator == 1
        return int(q)


def hermite_normal_form(gens) -> HNFResult:
    """Hermite basis of the lattice generated by integer vectors ``gens``.

    Large generator sets are handled by building the basis incrementally
    until it is full rank and then testing the remaining generators for
    membership in bulk, inserting only those that enlarge the lattice.
    """
    arr = np.asarray(gens, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("generators must be a 2-d array of integer vectors")
    ncols = arr.shape[1]
    arr = arr[np.any(arr != 0, axis=1)]
    if len(arr):
        arr = np.unique(arr, axis=0)
    ech = _Echelon(ncols)
    pos = 0
    while pos < len(arr) and ech.rank < ncols:
        ech.insert(arr[pos].tolist())
        pos += 1
    rest = arr[pos:]
    while len(rest):
        # v is in the lattice iff v @ B^{-1} is integral
        M, e = _row_inverse(ech.basis())
        bound = max(abs(x) for row in M for x in row) * int(np.abs(rest).max()) * ncols
        if bound < 2**62:
            X = rest @ np.asarray(M, dtype=np.int64)
            bad = np.flatnonzero(np.any(X % e != 0, axis=1))
        else:
            Mo = np.asarray(M, dtype=object)
            X = rest.astype(object) @ Mo
            bad = np.flatnonzero([any(x % e for x in row) for row in X])
        if not len(bad):
            break
        ech.insert(rest[bad[0]].tolist())
        rest = rest[bad[1:]]
    return HNFResult(tuple(tuple(r) for r in ech.basis()), ech.rank, ncols)


def _row_inverse(B: List[List[int]]):
    """``(M, e)`` with ``B^{-1} = M / e`` for an upper-triangular square ``B``."""
    n = len(B)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for i in range(n - 1, -1, -1):
            acc = Fraction(1 if i == j else 0)
            for k in range(i + 1, n):
                acc -= B[i][k] * inv[k][j]
            inv[i][j] = acc / B[i][i]
    e = lcm(*(x.denominator for row in inv for x in row))
    return [[int(x * e) for x in row] for row in inv], e


def lattice_index(gens, ambient_gens) -> int:
    """Index of the lattice spanned by ``gens`` inside the one spanned by ``ambient_gens``."""
    sub = hermite_normal_form(gens)
    amb = hermite_normal_form(ambient_gens)
    if not sub.full_rank:
        raise RankDeficient(f"generators span rank {sub.rank} < {sub.ncols}")
    return sub.index_in(amb)
