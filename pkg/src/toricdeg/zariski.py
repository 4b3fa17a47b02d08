"""Zariski decomposition of pseudo-effective Q-divisors.

The negative part is found by growing its support: start with the negative
curves meeting ``D`` negatively, solve the (negative definite) linear system
``(C_i . C_j) a_j = D . C_i`` on the support, and add every curve on which the
resulting positive part is still negative.  Supports have at most a few dozen
curves, so re-solving from scratch each round is cheap and exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotPseudoEffectiveError
from .lattice import DivisorClass, QDivisor, SurfaceModel, check_dim, format_class, intersect, is_effective
from .linalg import is_negative_definite, solve


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: QDivisor
    negative: tuple[tuple[DivisorClass, Fraction], ...]

    @property
    def support(self) -> frozenset[DivisorClass]:
        return frozenset(c for c, _ in self.negative)

    def coefficient(self, curve: Sequence[int]) -> Fraction:
        return dict(self.negative).get(tuple(curve), Fraction(0))

    def negative_divisor(self) -> QDivisor:
        n = len(self.positive)
        out = [Fraction(0)] * n
        for curve, a in self.negative:
            for i in range(n):
                out[i] += a * curve[i]
        return tuple(out)

    def scaled(self, k) -> "ZariskiDecomposition":
        k = Fraction(k)
        return ZariskiDecomposition(
            tuple(k * x for x in self.positive), tuple((c, k * a) for c, a in self.negative)
        )


def _lex_negative(value: Fraction, slope: Fraction) -> bool:
    return value < 0 or (value == 0 and slope < 0)


def _grow_support(S: SurfaceModel, base: Sequence, direction: Sequence | None = None):
    """Support and coefficients of the negative part of ``base + eps*direction``.

    ``eps`` is an infinitesimal: comparisons are lexicographic in
    ``(value, slope)``.  Returns ``(curves, a0, a1)`` with negative-part
    coefficients ``a0 + eps*a1`` (all ``a1`` zero when ``direction`` is None).
    """
    if direction is None:
        direction = (0,) * S.rank
    curves = S.negative_curves
    d0 = [intersect(S, base, c) for c in curves]
    d1 = [intersect(S, direction, c) for c in curves]
    gram = S.curve_gram

    support: list[int] = []
    a0: list[Fraction] = []
    a1: list[Fraction] = []
    while True:
        # P . C_k = D . C_k - sum_i a_i (C_i . C_k)
        p0 = [d0[k] - sum(a * gram[i][k] for a, i in zip(a0, support)) for k in range(len(curves))]
        p1 = [d1[k] - sum(a * gram[i][k] for a, i in zip(a1, support)) for k in range(len(curves))]
        new = [k for k in range(len(curves)) if k not in support and _lex_negative(p0[k], p1[k])]
        if not new:
            break
        support = sorted(support + new)
        sub = [[gram[i][j] for j in support] for i in support]
        if not is_negative_definite(sub):
            raise NotPseudoEffectiveError("negative-part support is not negative definite")
        a0 = solve(sub, [d0[i] for i in support])
        a1 = solve(sub, [d1[i] for i in support])
    if any(_lex_negative(x, y) for x, y in zip(a0, a1)):
        raise NotPseudoEffectiveError("negative coefficient in the negative part")
    return [curves[i] for i in support], a0, a1


def zariski_decompose(S: SurfaceModel, D: Sequence, check: bool = True) -> ZariskiDecomposition:
    """Return the Zariski decomposition ``D = P + N``.

    With ``check`` the input is first tested for pseudo-effectivity by LP.
    """
    check_dim(S, D)
    D = tuple(Fraction(x) for x in D)
    if check and not is_effective(S, D):
        raise NotPseudoEffectiveError(f"{format_class(D)} is not pseudo-effective on {S.name}")
    curves, coeffs, _ = _grow_support(S, D)
    negative = tuple((c, a) for c, a in zip(curves, coeffs) if a != 0)
    positive = list(D)
    for c, a in negative:
        for i in range(S.rank):
            positive[i] -= a * c[i]
    return ZariskiDecomposition(tuple(positive), negative)


def positive_part(S: SurfaceModel, D: Sequence) -> QDivisor:
    return zariski_decompose(S, D).positive


def volume(S: SurfaceModel, D: Sequence) -> Fraction:
    """``vol(D) = P(D)^2`` for pseudo-effective ``D``."""
    P = zariski_decompose(S, D).positive
    return Fraction(intersect(S, P, P))


def is_big(S: SurfaceModel, D: Sequence) -> bool:
    return is_effective(S, D) and volume(S, D) > 0


def null_set(S: SurfaceModel, P: Sequence) -> frozenset[DivisorClass]:
    """Negative curves orthogonal to the nef divisor ``P``."""
    from .lattice import is_nef

    if not is_nef(S, P):
        raise ValueError(f"{format_class(P)} is not nef")
    return frozenset(c for c in S.negative_curves if intersect(S, P, c) == 0)


def neg_set(S: SurfaceModel, D: Sequence) -> frozenset[DivisorClass]:
    return zariski_decompose(S, D).support


def integrality_bound(S: SurfaceModel) -> int:
    """``b^(rho-1)`` bounding the denominators of negative parts of integral divisors."""
    b = max(abs(intersect(S, c, c)) for c in S.negative_curves)
    return b ** (S.rank - 1)
