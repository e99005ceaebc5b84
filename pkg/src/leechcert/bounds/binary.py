"""Bounds for binary codes: Krawtchouk LP and constant-weight packing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Iterable

from ..exact.orthopoly import krawtchouk_value
from .simplex import OPTIMAL, LinearProgram, LPResult, simplex_solve


class InvalidParameters(ValueError):
    pass


@dataclass
class BinaryLPBound:
    n: int
    distances: tuple
    value: Fraction  # 1 + LP optimum, before flooring
    lp: LPResult

    @property
    def bound(self) -> int:
        return floor(self.value)

    @property
    def distance_distribution(self) -> dict:
        return {d: b for d, b in zip(self.distances, self.lp.x)}


def binary_code_lp(n: int, allowed_distances: Iterable[int]) -> BinaryLPBound:
    """Delsarte LP for codes of length ``n`` whose pairwise distances lie in ``allowed_distances``.

    Maximize ``1 + sum B_i`` over ``B_i >= 0`` with
    ``sum_i B_i K_k(i) >= -K_k(0)`` for every ``k = 1..n``.
    """
    D = sorted(set(int(d) for d in allowed_distances))
    if any(d < 1 or d > n for d in D):
        raise InvalidParameters(f"distances must lie in 1..{n}")
    if not D:
        return BinaryLPBound(n, (), Fraction(1), LPResult(OPTIMAL, Fraction(0), []))
    A_ub = [[-krawtchouk_value(n, k, i) for i in D] for k in range(1, n + 1)]
    b_ub = [comb(n, k) for k in range(1, n + 1)]
    res = simplex_solve(LinearProgram([1] * len(D), A_ub, b_ub))
    if res.status != OPTIMAL:
        raise RuntimeError(f"binary LP is {res.status}")
    return BinaryLPBound(n, tuple(D), 1 + res.value, res)


def binary_code_lp_bound(n: int, allowed_distances: Iterable[int]) -> int:
    return binary_code_lp(n, allowed_distances).bound


def constant_weight_packing_ratio(n: int, d: int, w: int) -> Fraction:
    if d % 2:
        raise InvalidParameters("minimum distance must be even")
    if not 0 <= w <= n:
        raise InvalidParameters("weight must lie in 0..n")
    if d > 2 * w:
        raise InvalidParameters(f"d = {d} > 2w = {2 * w}: the bound degenerates to 1")
    s = w - d // 2  # largest allowed support intersection
    return Fraction(comb(n, s + 1), comb(w, s + 1))


def constant_weight_bound(n: int, d: int, w: int) -> int:
    """Packing bound ``C(n, s+1) / C(w, s+1)`` with ``s = w - d/2``, floored.

    Two words at distance >= d share at most ``s`` coordinates, so no
    ``(s+1)``-subset lies in two supports.
    """
    return floor(constant_weight_packing_ratio(n, d, w))
