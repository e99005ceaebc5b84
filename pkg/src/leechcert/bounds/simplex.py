"""Exact two-phase tableau simplex over the rationals with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _fr(rows):
    return [[Fraction(v) for v in r] for r in rows]


@dataclass
class LinearProgram:
    """maximize ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``0 <= x <= upper``."""

    c: Sequence
    A_ub: Sequence[Sequence] = ()
    b_ub: Sequence = ()
    A_eq: Sequence[Sequence] = ()
    b_eq: Sequence = ()
    upper: Optional[Sequence] = None  # None entries mean unbounded above

    def __post_init__(self):
        self.c = [Fraction(v) for v in self.c]
        self.A_ub = _fr(self.A_ub)
        self.b_ub = [Fraction(v) for v in self.b_ub]
        self.A_eq = _fr(self.A_eq)
        self.b_eq = [Fraction(v) for v in self.b_eq]
        n = len(self.c)
        if len(self.A_ub) != len(self.b_ub) or len(self.A_eq) != len(self.b_eq):
            raise ValueError("constraint rows and right-hand sides differ in count")
        if any(len(r) != n for r in self.A_ub + self.A_eq):
            raise ValueError("constraint row length differs from objective length")
        if self.upper is not None:
            if len(self.upper) != n:
                raise ValueError("upper bounds have wrong length")
            for j, u in enumerate(self.upper):
                if u is not None:
                    row = [Fraction(0)] * n
                    row[j] = Fraction(1)
                    self.A_ub.append(row)
                    self.b_ub.append(Fraction(u))
            self.upper = None

    @property
    def nvars(self) -> int:
        return len(self.c)

    def is_feasible(self, x: Sequence) -> bool:
        x = [Fraction(v) for v in x]
        if any(v < 0 for v in x):
            return False
        for row, b in zip(self.A_ub, self.b_ub):
            if sum(a * v for a, v in zip(row, x)) > b:
                return False
        for row, b in zip(self.A_eq, self.b_eq):
            if sum(a * v for a, v in zip(row, x)) != b:
                return False
        return True

    def objective(self, x: Sequence) -> Fraction:
        return sum((a * Fraction(v) for a, v in zip(self.c, x)), Fraction(0))


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[List[Fraction]] = None
    y_ub: Optional[List[Fraction]] = None  # dual multipliers (optimal) or Farkas vector (infeasible)
    y_eq: Optional[List[Fraction]] = None
    ray: Optional[List[Fraction]] = None  # improving direction when unbounded
    pivots: int = 0
    notes: List[str] = field(default_factory=list)


class _Tableau:
    def __init__(self, rows, rhs, basis, ncols):
        self.T = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)
        self.ncols = ncols
        self.pivots = 0

    def pivot(self, r: int, j: int):
        T = self.T
        pr = T[r]
        pv = pr[j]
        if pv != 1:
            T[r] = pr = [v / pv for v in pr]
        for i, row in enumerate(T):
            if i != r:
                f = row[j]
                if f:
                    T[i] = [a - f * b for a, b in zip(row, pr)]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost):
        z = list(cost) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                z = [zi - cb * ti for zi, ti in zip(z, self.T[i])]
        return z  # z[-1] is minus the objective value

    def run(self, cost, allowed):
        """Minimize ``cost`` over the tableau; return None or the unbounded column."""
        while True:
            z = self.reduced_costs(cost)
            enter = next((j for j in range(self.ncols) if allowed[j] and z[j] < 0), None)
            if enter is None:
                return None
            best, leave = None, None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return enter
            self.pivot(leave, enter)


def simplex_solve(lp: LinearProgram) -> LPResult:
    """Solve ``lp`` exactly.

    Entering and leaving variables follow Bland's smallest-index rule, so the
    method terminates on degenerate problems. Optimal results carry dual
    multipliers; infeasible results carry a Farkas vector ``(y_ub, y_eq)`` with
    ``y_ub >= 0``, ``A_ub^T y_ub + A_eq^T y_eq >= 0`` and ``b.y < 0``; unbounded
    results carry a feasible improving ray.
    """
    n = lp.nvars
    mu, me = len(lp.A_ub), len(lp.A_eq)
    m = mu + me
    # columns: x (n) | slacks (mu) | artificials (m)
    ncols = n + mu + m
    rows, rhs, sign, basis, id_col = [], [], [], [], []
    for i in range(m):
        if i < mu:
            a, b = lp.A_ub[i], lp.b_ub[i]
        else:
            a, b = lp.A_eq[i - mu], lp.b_eq[i - mu]
        s = -1 if b < 0 else 1
        row = [s * v for v in a] + [Fraction(0)] * (mu + m)
        if i < mu:
            row[n + i] = Fraction(s)
        row[n + mu + i] = Fraction(1)
        rows.append(row)
        rhs.append(s * b)
        sign.append(s)
        if i < mu and s == 1:
            basis.append(n + i)
        else:
            basis.append(n + mu + i)
        id_col.append(basis[-1])
    tab = _Tableau(rows, rhs, basis, ncols)
    art = set(range(n + mu, ncols))
    needs_phase1 = any(b in art for b in tab.basis)
    if needs_phase1:
        # artificials that start nonbasic are never allowed in
        allowed1 = [j not in art or j in tab.basis for j in range(ncols)]
        cost1 = [Fraction(1) if allowed1[j] and j in art else Fraction(0) for j in range(ncols)]
        tab.run(cost1, allowed1)
        z = tab.reduced_costs(cost1)
        infeas = -z[-1]
        if infeas > 0:
            y = [cost1[id_col[i]] - z[id_col[i]] for i in range(m)]
            u = [-sign[i] * y[i] for i in range(m)]
            return LPResult(INFEASIBLE, y_ub=u[:mu], y_eq=u[mu:], pivots=tab.pivots)
        # drive remaining zero-level artificials out of the basis
        for r in range(m):
            if tab.basis[r] in art:
                j = next((j for j in range(n + mu) if tab.T[r][j] != 0), None)
                if j is not None:
                    tab.pivot(r, j)
    allowed2 = [j < n + mu for j in range(ncols)]
    cost2 = [-v for v in lp.c] + [Fraction(0)] * (mu + m)
    unb = tab.run(cost2, allowed2)
    if unb is not None:
        ray = [Fraction(0)] * ncols
        ray[unb] = Fraction(1)
        for i, b in enumerate(tab.basis):
            ray[b] = -tab.T[i][unb]
        return LPResult(UNBOUNDED, ray=ray[:n], pivots=tab.pivots)
    x = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        x[b] = tab.T[i][-1]
    z = tab.reduced_costs(cost2)
    y = [cost2[id_col[i]] - z[id_col[i]] for i in range(m)]
    duals = [-sign[i] * y[i] for i in range(m)]
    res = LPResult(OPTIMAL, value=lp.objective(x[:n]), x=x[:n], y_ub=duals[:mu], y_eq=duals[mu:], pivots=tab.pivots)
    if any(x[j] != 0 for j in art):
        res.notes.append("artificial variable left basic at a nonzero level")
    return res
