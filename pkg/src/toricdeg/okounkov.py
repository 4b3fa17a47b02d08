"""Newton-Okounkov polygons with respect to a flag (curve, general point).

For ``nu <= t <= mu`` the divisor ``D - tC`` is walked through its Zariski
chambers.  Inside a chamber the negative-part coefficients are affine in ``t``,
so the upper boundary ``beta(t) = P_t . C`` is piecewise linear.  The lower
boundary is identically zero because the point on ``C`` is general.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lp
from .errors import DegenerateBodyError, InvalidCurveClassError, NotBigError, NotPseudoEffectiveError
from .lattice import (
    DivisorClass,
    SurfaceModel,
    check_dim,
    format_class,
    intersect,
    is_effective,
    is_irreducible_class,
)
from .zariski import _grow_support, zariski_decompose

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class FlagSpec:
    curve: DivisorClass
    point: str = "general"

    def __post_init__(self):
        if self.point != "general":
            raise ValueError("only flags through a general point are supported")
        object.__setattr__(self, "curve", tuple(int(x) for x in self.curve))


@dataclass(frozen=True)
class Breakpoint:
    t: Fraction
    beta: Fraction
    support: frozenset = field(default_factory=frozenset)


def _shoelace2(vertices: Sequence[Point]) -> Fraction:
    n = len(vertices)
    return sum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def clean_cycle(points: Sequence[Point]) -> list[Point]:
    """Drop repeated and collinear points of a closed polygon chain."""
    pts = []
    for p in points:
        if not pts or pts[-1] != p:
            pts.append(p)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if _cross(a, b, c) == 0:
                del pts[i]
                changed = True
                break
    return pts


@dataclass(frozen=True)
class OkounkovPolygon:
    """The polygon ``{(t, y) : nu <= t <= mu, 0 <= y <= beta(t)}``."""

    nu: Fraction
    mu: Fraction
    breakpoints: tuple[Breakpoint, ...]

    @property
    def vertices(self) -> list[Point]:
        """Counter-clockwise vertices starting at ``(nu, 0)``."""
        upper = [(b.t, b.beta) for b in reversed(self.breakpoints)]
        return clean_cycle([(self.nu, Fraction(0)), (self.mu, Fraction(0))] + upper)

    @property
    def area(self) -> Fraction:
        v = self.vertices
        return abs(_shoelace2(v)) / 2 if len(v) > 2 else Fraction(0)

    def beta(self, t) -> Fraction:
        t = Fraction(t)
        if not self.nu <= t <= self.mu:
            raise ValueError(f"t = {t} outside [{self.nu}, {self.mu}]")
        bps = self.breakpoints
        for left, right in zip(bps, bps[1:]):
            if left.t <= t <= right.t:
                if right.t == left.t:
                    return left.beta
                return left.beta + (right.beta - left.beta) * (t - left.t) / (right.t - left.t)
        return bps[-1].beta

    def scaled(self, k) -> "OkounkovPolygon":
        k = Fraction(k)
        return OkounkovPolygon(
            self.nu * k,
            self.mu * k,
            tuple(Breakpoint(b.t * k, b.beta * k, b.support) for b in self.breakpoints),
        )

    def to_json(self) -> dict:
        return {
            "nu": str(self.nu),
            "mu": str(self.mu),
            "vertices": [[str(x), str(y)] for x, y in self.vertices],
        }


def _as_fractions(D) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in D)


def mu(S: SurfaceModel, D: Sequence, C: Sequence[int]) -> Fraction:
    """``max {t >= 0 : D - tC effective}``, by exact LP."""
    check_dim(S, D, C)
    gens = S.effective_generators
    # variables: t, lambda_1..lambda_m;  t*C + sum lambda_j G_j = D
    a_eq = [[C[i]] + [g[i] for g in gens] for i in range(S.rank)]
    res = lp.linprog([1] + [0] * len(gens), A_eq=a_eq, b_eq=list(D), maximize=True)
    if res.status == lp.INFEASIBLE:
        raise NotPseudoEffectiveError(f"{format_class(D)} is not effective on {S.name}")
    if res.status == lp.UNBOUNDED:
        raise ValueError(f"D - tC effective for all t: {tuple(C)} is not a curve class on {S.name}")
    return res.value


def nu_start(S: SurfaceModel, D: Sequence, C: Sequence[int]) -> Fraction:
    """Coefficient of ``C`` in the negative part of ``D``."""
    return zariski_decompose(S, D).coefficient(tuple(C))


def _check_flag_curve(S: SurfaceModel, C: DivisorClass) -> None:
    if C in S.negative_curves:
        return
    if S.is_theory_limited or not is_irreducible_class(S, C):
        raise InvalidCurveClassError(f"{C} is not a supported irreducible flag curve on {S.name}")


def okounkov_polygon(
    S: SurfaceModel, D: Sequence, flag: FlagSpec | Sequence[int], check_curve: bool = True
) -> OkounkovPolygon:
    """Chamber walk along ``D - tC`` from ``t = nu`` to ``t = mu``.

    ``check_curve=False`` skips the irreducibility test on the flag curve, so
    the walk can be run for any effective class.
    """
    if not isinstance(flag, FlagSpec):
        flag = FlagSpec(tuple(flag))
    C = flag.curve
    check_dim(S, D, C)
    if check_curve:
        _check_flag_curve(S, C)
    D = _as_fractions(D)
    dec = zariski_decompose(S, D)
    if intersect(S, dec.positive, dec.positive) <= 0:
        raise NotBigError(f"{format_class(D)} is not big on {S.name}")
    nu = dec.coefficient(C)
    top = mu(S, D, C)
    if top == nu:
        raise DegenerateBodyError("curve in stable negative locus")

    minus_c = tuple(-x for x in C)
    curves = S.negative_curves
    breakpoints: list[Breakpoint] = []
    t = nu
    while True:
        base = tuple(d - t * c for d, c in zip(D, C))
        support, a0, a1 = _grow_support(S, base, minus_c)
        idx = [curves.index(s) for s in support]
        # beta(t + s) = b0 + s*b1
        b0 = intersect(S, base, C) - sum(a * intersect(S, s, C) for a, s in zip(a0, support))
        b1 = -intersect(S, C, C) - sum(a * intersect(S, s, C) for a, s in zip(a1, support))
        breakpoints.append(Breakpoint(t, b0, frozenset(support)))
        if t == top:
            break
        # next wall: a coefficient reaching zero, or P.C' reaching zero outside the support
        steps = [-a / b for a, b in zip(a0, a1) if b < 0]
        for k, c in enumerate(curves):
            if k in idx:
                continue
            p0 = intersect(S, base, c) - sum(a * S.curve_gram[i][k] for a, i in zip(a0, idx))
            p1 = -intersect(S, C, c) - sum(a * S.curve_gram[i][k] for a, i in zip(a1, idx))
            if p1 < 0:
                steps.append(-p0 / p1)
        step = min([s for s in steps if s > 0] + [top - t])
        t_next = t + step
        if t_next == top:
            breakpoints.append(Breakpoint(top, b0 + step * b1, frozenset(support)))
            break
        t = t_next
    return OkounkovPolygon(nu, top, tuple(breakpoints))


def numerical_fiber(S: SurfaceModel, D: Sequence, flag: FlagSpec | Sequence[int]) -> list[Point]:
    """Vertices of the (degenerate) body of an effective, non-big ``D``.

    Requires ``-K - C`` big and nef.  Returns one point, or the two endpoints of
    a segment.  When ``mu > 0`` the segment is read off the global body.
    """
    from .global_body import global_body, fiber
    from .lattice import is_nef

    if not isinstance(flag, FlagSpec):
        flag = FlagSpec(tuple(flag))
    C = flag.curve
    check_dim(S, D, C)
    rest = tuple(k - c for k, c in zip(S.anticanonical, C))
    if not (is_nef(S, rest) and intersect(S, rest, rest) > 0):
        from .errors import HypothesisError

        raise HypothesisError(f"-K - C is not big and nef for C = {C}")
    D = _as_fractions(D)
    if not is_effective(S, D):
        raise NotPseudoEffectiveError(f"{format_class(D)} is not effective on {S.name}")
    P = zariski_decompose(S, D).positive
    if intersect(S, P, P) > 0:
        raise ValueError("divisor is big; use okounkov_polygon")
    m = mu(S, D, C)
    zero = Fraction(0)
    if m == 0:
        top = Fraction(intersect(S, D, C))
        return [(zero, zero)] if top == 0 else [(zero, zero), (zero, top)]
    return fiber(global_body(S, flag), D)
