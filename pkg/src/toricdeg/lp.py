"""A small exact linear-programming solver.

Dense two-phase tableau simplex with Bland's anti-cycling rule, operating on
``fractions.Fraction`` throughout.  The problems solved in this package have at
most a few hundred columns, so a dense tableau is perfectly adequate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows  # each row: coefficients..., rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        inv = 1 / row[c]
        row = [x * inv for x in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = c

    def minimize(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Run primal simplex on the first ``allowed`` columns."""
        while True:
            entering = None
            for j in range(allowed):
                if j in self.basis:
                    continue
                reduced = cost[j] - sum(cost[b] * row[j] for b, row in zip(self.basis, self.rows))
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering)


def _standard_form_solve(c, a_eq, b_eq) -> LPResult:
    """minimize c.x subject to a_eq x = b_eq, x >= 0."""
    m, n = len(a_eq), len(c)
    rows = []
    for i, (row, rhs) in enumerate(zip(a_eq, b_eq)):
        row = [Fraction(v) for v in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        artificial = [Fraction(int(k == i)) for k in range(m)]
        rows.append(row + artificial + [rhs])
    tab = _Tableau(rows, [n + i for i in range(m)])

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tab.minimize(phase1, n + m)
    if sum(row[-1] for b, row in zip(tab.basis, tab.rows) if b >= n) != 0:
        return LPResult(INFEASIBLE)

    # drive remaining (zero-valued) artificials out of the basis
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= n:
            col = next((j for j in range(n) if tab.rows[r][j] != 0), None)
            if col is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1
    tab.rows = [row[:n] + [row[-1]] for row in tab.rows]

    cost = [Fraction(v) for v in c]
    status = tab.minimize(cost, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for b, row in zip(tab.basis, tab.rows):
        x[b] = row[-1]
    return LPResult(OPTIMAL, sum(ci * xi for ci, xi in zip(cost, x)), tuple(x))


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] | None = None,
    b_ub: Sequence | None = None,
    A_eq: Sequence[Sequence] | None = None,
    b_eq: Sequence | None = None,
    free: bool | Iterable[int] = False,
    maximize: bool = False,
) -> LPResult:
    """Solve ``min (or max) c.x`` s.t. ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    Variables are nonnegative unless listed in ``free`` (``True`` frees all).
    The returned ``value`` is the optimum of the requested sense.
    """
    n = len(c)
    free_idx = set(range(n)) if free is True else set(free or ())
    A_ub, b_ub = list(A_ub or []), list(b_ub or [])
    A_eq, b_eq = list(A_eq or []), list(b_eq or [])

    # column map: every original variable -> (plus column, minus column or None)
    cols: list[tuple[int, int | None]] = []
    k = 0
    for j in range(n):
        if j in free_idx:
            cols.append((k, k + 1))
            k += 2
        else:
            cols.append((k, None))
            k += 1
    n_slack = len(A_ub)
    width = k + n_slack

    def expand(row):
        out = [Fraction(0)] * width
        for j, v in enumerate(row):
            p, q = cols[j]
            out[p] = Fraction(v)
            if q is not None:
                out[q] = -Fraction(v)
        return out

    rows, rhs = [], []
    for i, (row, b) in enumerate(zip(A_ub, b_ub)):
        r = expand(row)
        r[k + i] = Fraction(1)
        rows.append(r)
        rhs.append(b)
    for row, b in zip(A_eq, b_eq):
        rows.append(expand(row))
        rhs.append(b)

    sign = -1 if maximize else 1
    cost = expand([sign * Fraction(v) for v in c])
    if not rows:
        # no constraints: bounded only if the objective cannot decrease
        if any(v < 0 for v in cost[:k]):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), tuple(Fraction(0) for _ in range(n)))

    res = _standard_form_solve(cost, rows, rhs)
    if res.status != OPTIMAL:
        return res
    x = []
    for p, q in cols:
        v = res.x[p] - (res.x[q] if q is not None else 0)
        x.append(v)
    return LPResult(OPTIMAL, sign * res.value, tuple(x))


def in_cone(generators: Sequence[Sequence], target: Sequence) -> LPResult:
    """Feasibility of ``target = sum lambda_i g_i`` with ``lambda >= 0``."""
    n = len(target)
    a_eq = [[g[i] for g in generators] for i in range(n)]
    return linprog([0] * len(generators), A_eq=a_eq, b_eq=list(target))
