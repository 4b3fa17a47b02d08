"""Global Newton-Okounkov cones for a flag (negative curve, general point).

Coordinates are ``(nu1, nu2, H, E_1, ..., E_r)``.  The cone is generated by
``(1, 0, [C])``, by ``(0, 0, [C'])`` for the other negative curves and, for every
extremal nef class ``N``, by ``(0, 0, N)`` and ``(0, N.C, N)``.  Its fiber over a
class ``[D]`` is the Okounkov polygon of ``D``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from . import lp
from .cones import (
    HilbertCheck,
    RationalCone,
    complete_generators,
    dual_and_minimize,
    hilbert_basis_check,
    nef_extremal_rays,
    positive_grading,
)
from .errors import InvalidCurveClassError, UnverifiedSemigroupError
from .lattice import DivisorClass, SurfaceModel, check_dim, intersect
from .linalg import dot
from .okounkov import FlagSpec, clean_cycle

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class GlobalBody:
    surface: SurfaceModel
    flag: FlagSpec
    raw_generators: tuple[tuple[int, ...], ...]
    cone: RationalCone

    @property
    def ambient_dim(self) -> int:
        return 2 + self.surface.rank

    @property
    def grading(self) -> tuple[int, ...]:
        """``nu1 + D.(-K)``: positive on the cone minus the origin."""
        S = self.surface
        return (1, 0) + tuple(g * k for g, k in zip(S.diagonal, S.anticanonical))


@dataclass(frozen=True)
class SemigroupGenerators:
    generators: tuple[tuple[int, ...], ...]
    verified: bool
    hilbert_verified_to: int
    added: tuple[tuple[int, ...], ...] = field(default=())
    check: HilbertCheck | None = None


def chamber_generators(S: SurfaceModel, C: Sequence[int]) -> list[DivisorClass]:
    """Negative curves other than ``C`` together with the extremal nef classes."""
    C = tuple(C)
    check_dim(S, C)
    if C not in S.negative_curves:
        raise InvalidCurveClassError(f"{C} is not a negative curve on {S.name}")
    others = [c for c in S.negative_curves if c != C]
    return sorted(set(others) | set(nef_extremal_rays(S)))


def global_body(S: SurfaceModel, flag: FlagSpec | Sequence[int]) -> GlobalBody:
    if not isinstance(flag, FlagSpec):
        flag = FlagSpec(tuple(flag))
    C = flag.curve
    nef = set(nef_extremal_rays(S))
    raw = {(1, 0) + C}
    for D in chamber_generators(S, C):
        raw.add((0, 0) + D)
        if D in nef:
            raw.add((0, intersect(S, D, C)) + D)
    raw = tuple(sorted(raw))
    return GlobalBody(S, flag, raw, dual_and_minimize(raw))


@lru_cache(maxsize=None)
def _height_bound(body: GlobalBody) -> tuple[Fraction, ...]:
    """A class functional ``w`` with ``nu1 + nu2 <= w . [D]`` on the whole cone."""
    rays = body.cone.rays
    # w . cls(r) >= r_0 + r_1 for every ray r, with w free
    res = lp.linprog(
        [0] * body.surface.rank,
        A_ub=[[-x for x in r[2:]] for r in rays],
        b_ub=[-(r[0] + r[1]) for r in rays],
        free=True,
    )
    if not res.feasible:
        raise ValueError("fibers of this cone are unbounded")
    return res.x


def _clip(poly: list[Point], a, b, c) -> list[Point]:
    """Part of a convex polygon where ``a x + b y + c >= 0``."""
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        vp = a * p[0] + b * p[1] + c
        vq = a * q[0] + b * q[1] + c
        if vp >= 0:
            out.append(p)
        if (vp > 0 > vq) or (vp < 0 < vq):
            s = vp / (vp - vq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    return out


def fiber(body: GlobalBody, D: Sequence) -> list[Point]:
    """Vertices of ``{(x, y) : (x, y, [D]) in cone}``, counter-clockwise.

    A segment is returned as its two endpoints in lexicographic order.
    """
    check_dim(body.surface, D)
    D = tuple(Fraction(x) for x in D)
    top = dot(_height_bound(body), D)
    if top < 0:
        return []
    zero = Fraction(0)
    poly: list[Point] = [(zero, zero), (top, zero), (zero, top)]
    for f in body.cone.facets:
        poly = _clip(poly, f[0], f[1], dot(f[2:], D))
        if not poly:
            return []
    pts = sorted(set(poly))
    if len(pts) <= 2:
        return pts
    return clean_cycle(_convex_hull(pts))


def _convex_hull(points: list[Point]) -> list[Point]:
    """Andrew's monotone chain; counter-clockwise, no collinear points."""
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def global_semigroup_generators(
    body: GlobalBody | RationalCone, degree_bound: int = 6, grading: Sequence[int] | None = None
) -> SemigroupGenerators:
    """Extremal rays, completed by any lattice points needed up to ``degree_bound``.

    ``body`` may also be a bare cone; its grading is then found by LP unless given.
    """
    if isinstance(body, GlobalBody):
        cone, grading = body.cone, grading or body.grading
    else:
        cone = body
    rays = list(cone.rays)
    check = hilbert_basis_check(cone, rays, degree_bound, grading)
    if check.verified:
        return SemigroupGenerators(tuple(rays), True, degree_bound, check=check)
    if grading is None:
        grading = positive_grading(cone)
    gens, added = complete_generators(cone, rays, degree_bound, grading)
    return SemigroupGenerators(tuple(gens), False, degree_bound, tuple(added), check)


_DEGREE_NAMES = {1: "line", 2: "conic", 3: "cubic", 4: "quartic", 5: "quintic", 6: "sextic"}


def describe_class(S: SurfaceModel, D: Sequence[int]) -> str:
    """Plane-model description of a general member of ``|D|``."""
    a, mults = D[0], [-b for b in D[1:]]
    if a == 0:
        return "general member of |" + ",".join(str(x) for x in D) + "|"
    name = _DEGREE_NAMES.get(a, f"curve of degree {a}")
    through = []
    for i, m in enumerate(mults, start=1):
        if m == 1:
            through.append(f"P_{i}")
        elif m > 1:
            through.append(f"P_{i} (multiplicity {m})")
    if any(m < 0 for m in mults):
        return "general member of |" + ",".join(str(x) for x in D) + "|"
    if not through:
        return f"pullback of a general {name}"
    return f"strict transform of a general {name} through " + ", ".join(through)


def cox_generators_report(
    S: SurfaceModel, body: GlobalBody, generators: SemigroupGenerators | None = None, degree_bound: int = 6
) -> list[tuple[DivisorClass, str]]:
    """Divisor classes of the semigroup generators, labelled geometrically."""
    if generators is None:
        generators = global_semigroup_generators(body, degree_bound)
    if not generators.verified:
        raise UnverifiedSemigroupError(
            f"extremal rays do not generate the semigroup up to degree {generators.hilbert_verified_to}"
        )
    flag_curve = body.flag.curve
    report: dict[DivisorClass, str] = {}
    for g in generators.generators:
        cls = tuple(g[2:])
        if cls == flag_curve:
            label = "flag curve"
        elif cls in S.negative_curves:
            label = "negative curve"
        else:
            label = describe_class(S, cls)
        report.setdefault(cls, label)
    return sorted(report.items())
