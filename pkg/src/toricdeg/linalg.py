"""Exact linear algebra over the rationals.

Everything here works on plain Python sequences of ``int`` / ``Fraction``;
matrices are lists of rows.  No floating point is used anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Vector = Sequence[Fraction]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def bilinear(gram: Sequence[Sequence[int]], u: Sequence, v: Sequence):
    """Return ``u^T gram v``."""
    n = len(gram)
    if len(u) != n or len(v) != n:
        raise ValueError(f"expected vectors of length {n}, got {len(u)} and {len(v)}")
    total = 0
    for i in range(n):
        if not u[i]:
            continue
        row = gram[i]
        s = 0
        for j in range(n):
            if row[j] and v[j]:
                s += row[j] * v[j]
        total += u[i] * s
    return total


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else 0


def denominator_lcm(values) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    den = denominator_lcm(v)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def _as_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = _as_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of ``{x : row . x = 0 for every row}``."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    red, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -red[r][f]
        basis.append(primitive(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system ``a x = b``; raises ``ZeroDivisionError`` if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular system")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return x


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    cols = [solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def det(a: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    m = [list(map(int, row)) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_negative_definite(gram: Sequence[Sequence]) -> bool:
    """Symmetric-matrix test: all pivots of an LDL^T factorisation are negative."""
    m = _as_fractions(gram)
    n = len(m)
    for k in range(n):
        if m[k][k] >= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k + 1, n):
                m[i][j] -= f * m[k][j]
    return True
