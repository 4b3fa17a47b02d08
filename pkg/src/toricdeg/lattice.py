"""Picard lattices of the supported (weak) del Pezzo surfaces.

Divisor classes are plain tuples in the fixed basis ``(H, E_1, ..., E_r)``:
``(6, -1, -1, -2, -3, -4)`` means ``6H - E_1 - E_2 - 2E_3 - 3E_4 - 4E_5``.
Integral classes use ``int`` entries, rational ones ``Fraction`` entries.

Supported surfaces:

* ``X1`` ... ``X8`` -- blow-ups of P^2 in r general points,
* ``L3`` -- four points, the first three collinear,
* ``S6`` -- six points on a conic.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Tuple

from . import lp
from .errors import DimensionMismatchError, InvalidCurveClassError, TheoryLimitedError

DivisorClass = Tuple[int, ...]
QDivisor = Tuple[Fraction, ...]

# (-1)-curve families aH - sum b_i E_i, up to permutation of the indices
_MINUS_ONE_FAMILIES: list[tuple[int, tuple[int, ...]]] = [
    (0, (-1,)),
    (1, (1, 1)),
    (2, (1, 1, 1, 1, 1)),
    (3, (2, 1, 1, 1, 1, 1, 1)),
    (4, (2, 2, 2, 1, 1, 1, 1, 1)),
    (5, (2, 2, 2, 2, 2, 2, 1, 1)),
    (6, (3, 2, 2, 2, 2, 2, 2, 2)),
]


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    r: int
    gram: tuple[tuple[int, ...], ...]
    negative_curves: tuple[DivisorClass, ...]
    canonical: DivisorClass
    effective_generators: tuple[DivisorClass, ...]

    @property
    def rank(self) -> int:
        return self.r + 1

    @property
    def anticanonical(self) -> DivisorClass:
        return tuple(-x for x in self.canonical)

    @property
    def is_theory_limited(self) -> bool:
        return self.name in ("X7", "X8")

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    @cached_property
    def curve_gram(self) -> tuple[tuple[int, ...], ...]:
        """Intersection matrix of ``negative_curves``."""
        cs = self.negative_curves
        return tuple(tuple(intersect(self, c, e) for e in cs) for c in cs)

    @cached_property
    def minus_two_curves(self) -> tuple[DivisorClass, ...]:
        return tuple(c for c in self.negative_curves if intersect(self, c, c) == -2)

    def unit(self, i: int) -> DivisorClass:
        return tuple(int(j == i) for j in range(self.rank))

    def __repr__(self) -> str:
        return f"SurfaceModel({self.name}, rank={self.rank}, {len(self.negative_curves)} negative curves)"


def _blowup_gram(r: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(r + 1)) for i in range(r + 1)
    )


def _class(a: int, bs: Sequence[int], r: int) -> DivisorClass:
    return (a,) + tuple(-b for b in bs) + (0,) * (r - len(bs))


def minus_one_curves(r: int) -> list[DivisorClass]:
    """All (-1)-curve classes on X_r, instantiated from the classical families."""
    found = set()
    for a, pattern in _MINUS_ONE_FAMILIES:
        if len(pattern) > r:
            continue
        padded = pattern + (0,) * (r - len(pattern))
        for perm in set(itertools.permutations(padded)):
            found.add((a,) + tuple(-b for b in perm))
    return sorted(found)


def _l3_curves() -> list[DivisorClass]:
    r = 4
    curves = [_class(0, [-1 if j == i else 0 for j in range(r)], r) for i in range(r)]
    # lines through P_4 and one of the collinear points
    for i in range(3):
        bs = [0] * r
        bs[i] = bs[3] = 1
        curves.append(_class(1, bs, r))
    curves.append(_class(1, [1, 1, 1, 0], r))  # the (-2)-line through P_1, P_2, P_3
    return sorted(curves)


def _s6_curves() -> list[DivisorClass]:
    r = 6
    curves = [_class(0, [-1 if j == i else 0 for j in range(r)], r) for i in range(r)]
    for i, j in itertools.combinations(range(r), 2):
        bs = [0] * r
        bs[i] = bs[j] = 1
        curves.append(_class(1, bs, r))
    curves.append(_class(2, [1] * r, r))  # the (-2)-conic through all six points
    return sorted(curves)


_KIND = re.compile(r"^(?:X|XR\(?)([1-8])\)?$")


def make_surface(kind: str) -> SurfaceModel:
    """Build the lattice model for ``"X1"``..``"X8"``, ``"L3"`` or ``"S6"``."""
    key = kind.strip().upper()
    if key == "L3":
        r, curves = 4, _l3_curves()
    elif key == "S6":
        r, curves = 6, _s6_curves()
    else:
        m = _KIND.match(key)
        if not m:
            raise ValueError(f"unknown surface {kind!r}; expected X1..X8, L3 or S6")
        r = int(m.group(1))
        key = f"X{r}"
        curves = minus_one_curves(r)
    canonical = (-3,) + (1,) * r
    generators = list(curves)
    if key == "X1":
        # X_1 has a single negative curve; the ruling H - E_1 spans the other ray of Eff
        generators.append((1, -1))
    return SurfaceModel(
        name=key,
        r=r,
        gram=_blowup_gram(r),
        negative_curves=tuple(curves),
        canonical=canonical,
        effective_generators=tuple(sorted(generators)),
    )


def format_class(D: Sequence) -> str:
    return "(" + ", ".join(str(x) for x in D) + ")"


def check_dim(S: SurfaceModel, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != S.rank:
            raise DimensionMismatchError(f"{S.name} needs vectors of length {S.rank}, got {len(v)}")


def intersect(S: SurfaceModel, D: Sequence, E: Sequence):
    check_dim(S, D, E)
    return sum(g * d * e for g, d, e in zip(S.diagonal, D, E) if d and e)


def self_intersection(S: SurfaceModel, D: Sequence):
    return intersect(S, D, D)


def is_nef(S: SurfaceModel, D: Sequence) -> bool:
    check_dim(S, D)
    return all(intersect(S, D, C) >= 0 for C in S.effective_generators)


def is_effective(S: SurfaceModel, D: Sequence) -> bool:
    """Membership of ``D`` in the (closed) effective cone, by an exact LP."""
    check_dim(S, D)
    if not any(D):
        return True
    return lp.in_cone(S.effective_generators, D).feasible


def genus(S: SurfaceModel, C: Sequence[int]) -> int:
    """Arithmetic genus of an irreducible curve in the class ``C``."""
    check_dim(S, C)
    a, bs = C[0], [-c for c in C[1:]]
    twice = (a - 1) * (a - 2) - sum(b * (b - 1) for b in bs)
    if twice % 2:
        raise InvalidCurveClassError(f"{C} has non-integral genus")
    return twice // 2


def is_irreducible_class(S: SurfaceModel, D: Sequence[int]) -> bool:
    """Whether ``|D|`` contains an irreducible curve.

    On X_r (r <= 6) this is: a (-1)-curve, a big and nef class, or a conic class
    (``D.(-K) = 2`` and ``D^2 = 0``).  On L3 and S6 only listed negative curves and
    big-and-nef classes are recognised.
    """
    check_dim(S, D)
    if S.is_theory_limited:
        raise TheoryLimitedError(f"irreducibility criterion not available on {S.name}")
    D = tuple(D)
    if D in S.negative_curves:
        return True
    square = self_intersection(S, D)
    if square > 0 and is_nef(S, D):
        return True
    if S.name.startswith("X"):
        return square == 0 and intersect(S, D, S.anticanonical) == 2
    return False


def parse_surface_vector(S: SurfaceModel, text: str) -> tuple:
    """Parse ``"6,-1,-1,-2,-3,-4"`` (entries may be ``p/q``)."""
    parts = [p.strip() for p in text.strip().strip("[]()").split(",") if p.strip()]
    try:
        values = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse divisor {text!r}") from exc
    check_dim(S, values)
    if all(v.denominator == 1 for v in values):
        return tuple(int(v) for v in values)
    return values
