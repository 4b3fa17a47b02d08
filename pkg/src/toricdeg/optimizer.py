"""Search for flag curves of minimal normalized surface area.

The divisor is first replaced by its positive part ``P``.  Every negative curve
is tried; the best value found bounds the nef classes that still need to be
tried (``P . xi < optimum + 1``).  All classes attaining the minimum are kept.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Callable, Sequence

from . import lp
from .ehrhart import surface_area_of
from .errors import DomainError, NotBigError, TheoryLimitedError
from .lattice import (
    DivisorClass,
    SurfaceModel,
    check_dim,
    format_class,
    intersect,
    is_irreducible_class,
    is_nef,
    self_intersection,
)
from .okounkov import okounkov_polygon
from .zariski import zariski_decompose

NEGATIVE = "negative"
NEF = "nef"


@dataclass(frozen=True)
class OptimizationResult:
    divisor: tuple
    positive: tuple
    optimum: Fraction
    optimal_curves: tuple[tuple[DivisorClass, str], ...]
    hilbert_second: Fraction  # P . (-K)
    induces_normal: bool

    def curves_of_kind(self, kind: str) -> list[DivisorClass]:
        return [c for c, k in self.optimal_curves if k == kind]

    def to_json(self) -> dict:
        return {
            "divisor": [str(x) for x in self.divisor],
            "positive_part": [str(x) for x in self.positive],
            "optimum": str(self.optimum),
            "nef_curves": [list(c) for c in self.curves_of_kind(NEF)],
            "negative_curves": [list(c) for c in self.curves_of_kind(NEGATIVE)],
            "hilbert_second": str(self.hilbert_second),
            "induces_normal": self.induces_normal,
        }


def plane_model_candidate(S: SurfaceModel, xi: Sequence[int]) -> bool:
    """Loose curve-class test used for nef candidates.

    Accepts nef classes with ``xi^2 >= 0`` whose plane model ``aH - sum b_i E_i``
    has every multiplicity ``b_i < a`` once ``a >= 2``.  Multiples of conic
    classes pass; it is the rule that reproduces the published X_5 optimizer
    table (see README).
    """
    if not is_nef(S, xi) or self_intersection(S, xi) < 0:
        return False
    a = xi[0]
    return a < 2 or all(-b < a for b in xi[1:])


def strict_candidate(S: SurfaceModel, xi: Sequence[int]) -> bool:
    """Classes that contain an irreducible curve (via ``is_irreducible_class``)."""
    return is_nef(S, xi) and is_irreducible_class(S, xi)


CANDIDATE_RULES: dict[str, Callable] = {"table": plane_model_candidate, "strict": strict_candidate}


def _nef_box(S: SurfaceModel, P: Sequence, bound) -> list[tuple[int, int]]:
    """Integer coordinate ranges of ``{xi nef : P . xi <= bound}``."""
    gram_p = [g * p for g, p in zip(S.diagonal, P)]
    a_ub = [[-g * c for g, c in zip(S.diagonal, C)] for C in S.effective_generators]
    b_ub = [0] * len(a_ub)
    a_ub.append(gram_p)
    b_ub.append(bound)
    box = []
    for i in range(S.rank):
        obj = [int(j == i) for j in range(S.rank)]
        lo = lp.linprog(obj, A_ub=a_ub, b_ub=b_ub, free=True)
        hi = lp.linprog(obj, A_ub=a_ub, b_ub=b_ub, free=True, maximize=True)
        if lo.status != lp.OPTIMAL or hi.status != lp.OPTIMAL:
            raise NotBigError("positive part is not big: candidate region is unbounded")
        box.append((ceil(lo.value), floor(hi.value)))
    return box


def enumerate_nef_candidates(S: SurfaceModel, P: Sequence, bound) -> list[DivisorClass]:
    """All integral nef classes ``xi`` with ``0 < P . xi <= bound``, sorted."""
    check_dim(S, P)
    bound = Fraction(bound)
    if bound <= 0:
        return []
    box = _nef_box(S, P, bound)
    out = []
    for xi in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        if not any(xi):
            continue
        value = intersect(S, P, xi)
        if 0 < value <= bound and is_nef(S, xi):
            out.append(xi)
    return sorted(out)


def optimize(S: SurfaceModel, D: Sequence, rule: str = "table") -> OptimizationResult:
    """Minimal normalized surface area of ``D`` over negative and nef flag curves."""
    check_dim(S, D)
    if S.is_theory_limited:
        raise TheoryLimitedError(f"the irreducibility criterion is not available on {S.name}")
    accept = CANDIDATE_RULES[rule]
    P = zariski_decompose(S, D).positive
    if self_intersection(S, P) <= 0:
        raise NotBigError(f"{format_class(D)} is not big on {S.name}")

    best: Fraction | None = None
    optimal: list[tuple[DivisorClass, str]] = []

    def consider(curve, kind):
        nonlocal best, optimal
        try:
            value = surface_area_of(okounkov_polygon(S, P, curve, check_curve=False))
        except DomainError:
            return
        if best is None or value < best:
            best, optimal = value, [(curve, kind)]
        elif value == best:
            optimal.append((curve, kind))

    for curve in S.negative_curves:
        consider(curve, NEGATIVE)
    limit = best + 1 if best is not None else Fraction(intersect(S, P, S.anticanonical)) + 1
    for xi in enumerate_nef_candidates(S, P, limit):
        if intersect(S, P, xi) < limit and accept(S, xi):
            consider(xi, NEF)

    second = Fraction(intersect(S, P, S.anticanonical))
    return OptimizationResult(
        divisor=tuple(D),
        positive=P,
        optimum=best,
        optimal_curves=tuple(sorted(optimal, key=lambda ck: (ck[1], ck[0]))),
        hilbert_second=second,
        induces_normal=best == second,
    )
