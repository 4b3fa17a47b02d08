"""Ehrhart polynomials of lattice polygons and Hilbert polynomials of divisors.

A polygon is a list of vertices in counter-clockwise order.  For a lattice
polygon Pick's theorem gives the Ehrhart polynomial ``A k^2 + (B/2) k + 1``
with ``A`` the area and ``B`` the number of boundary lattice points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence

from .lattice import SurfaceModel, intersect
from .linalg import denominator_lcm
from .okounkov import FlagSpec, OkounkovPolygon, _shoelace2, clean_cycle, okounkov_polygon
from .zariski import zariski_decompose

Point = tuple


@dataclass(frozen=True)
class Poly2:
    """``a2 k^2 + a1 k + a0``."""

    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __call__(self, k) -> Fraction:
        return self.a2 * k * k + self.a1 * k + self.a0

    def rescaled(self, k) -> "Poly2":
        """The polynomial of ``k``-fold multiples: ``t -> p(k t)``."""
        return Poly2(self.a2 * k * k, self.a1 * k, self.a0)

    def __str__(self) -> str:
        terms = []
        for coeff, mono in ((self.a2, "t^2"), (self.a1, "t"), (self.a0, "")):
            if coeff == 0:
                continue
            c = str(coeff)
            if mono and coeff == 1:
                c = ""
            elif mono and coeff.denominator != 1:
                c = f"({c})"
            terms.append(f"{c}{mono}" if mono else c)
        return "+".join(terms).replace("+-", "-") or "0"

    def to_json(self) -> dict:
        return {"a2": str(self.a2), "a1": str(self.a1), "a0": str(self.a0)}


def _vertices(polygon) -> list[Point]:
    if isinstance(polygon, OkounkovPolygon):
        return polygon.vertices
    pts = [(Fraction(x), Fraction(y)) for x, y in polygon]
    if len(pts) > 2 and _shoelace2(pts) < 0:
        pts.reverse()
    return clean_cycle(pts)


def scale_to_integral(polygon) -> tuple[int, list[Point]]:
    """Smallest ``k0`` with ``k0 * polygon`` integral, and the scaled vertices."""
    verts = _vertices(polygon)
    k0 = denominator_lcm([c for v in verts for c in v])
    return k0, [(int(x * k0), int(y * k0)) for x, y in verts]


def _require_integral(verts):
    if any(Fraction(c).denominator != 1 for v in verts for c in v):
        raise ValueError("polygon is not integral; scale it first")


def lattice_count(polygon, k: int = 1) -> int:
    """Number of lattice points of ``k * polygon`` (closed), by vertical slices."""
    verts = _vertices(polygon)
    if not verts:
        raise ValueError("empty polygon")
    _require_integral(verts)
    verts = [(Fraction(x * k), Fraction(y * k)) for x, y in verts]
    n = len(verts)
    if n == 1:
        return 1
    if n == 2:
        (x0, y0), (x1, y1) = verts
        return gcd(int(abs(x1 - x0)), int(abs(y1 - y0))) + 1

    xs = [v[0] for v in verts]
    # counter-clockwise: edges with increasing x lie below, decreasing x above
    lower, upper = [], []
    for i in range(n):
        (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % n]
        if x1 > x0:
            lower.append((x0, y0, x1, y1))
        elif x1 < x0:
            upper.append((x1, y1, x0, y0))

    def height(edges, x, pick):
        values = [y0 + (y1 - y0) * (x - x0) / (x1 - x0) for x0, y0, x1, y1 in edges if x0 <= x <= x1]
        return pick(values)

    total = 0
    for x in range(int(min(xs)), int(max(xs)) + 1):
        if x == min(xs) or x == max(xs):
            ys = [v[1] for v in verts if v[0] == x]
            bottom, top = min(ys), max(ys)
        else:
            bottom, top = height(lower, x, max), height(upper, x, min)
        total += floor(top) - ceil(bottom) + 1
    return total


def boundary_count(polygon) -> int:
    """``B``: lattice points on the boundary of an integral polygon."""
    verts = _vertices(polygon)
    _require_integral(verts)
    n = len(verts)
    if n == 1:
        return 1
    return sum(
        gcd(int(abs(verts[(i + 1) % n][0] - verts[i][0])), int(abs(verts[(i + 1) % n][1] - verts[i][1])))
        for i in range(n)
    ) if n > 2 else gcd(int(abs(verts[1][0] - verts[0][0])), int(abs(verts[1][1] - verts[0][1]))) + 1


def polygon_area(polygon) -> Fraction:
    verts = _vertices(polygon)
    return abs(_shoelace2(verts)) / 2 if len(verts) > 2 else Fraction(0)


def ehrhart_polynomial(polygon) -> Poly2:
    verts = _vertices(polygon)
    _require_integral(verts)
    area = polygon_area(verts)
    if area == 0:
        raise ValueError("degenerate polygon: zero area")
    return Poly2(area, Fraction(boundary_count(verts), 2), Fraction(1))


def hilbert_polynomial(S: SurfaceModel, D: Sequence) -> Poly2:
    """Riemann-Roch on the positive part: ``P^2/2 t^2 + P.(-K)/2 t + 1``."""
    P = zariski_decompose(S, D).positive
    return Poly2(
        Fraction(intersect(S, P, P), 2),
        Fraction(intersect(S, P, S.anticanonical), 2),
        Fraction(1),
    )


def normalized_surface_area(S: SurfaceModel, D: Sequence, C) -> Fraction:
    """``B(k0 * Delta) / k0`` for the polygon of ``D`` with respect to ``C``."""
    polygon = C if isinstance(C, OkounkovPolygon) else okounkov_polygon(S, D, _flag(C))
    return surface_area_of(polygon)


def surface_area_of(polygon) -> Fraction:
    k0, integral = scale_to_integral(polygon)
    return Fraction(boundary_count(integral), k0)


def _flag(C) -> FlagSpec:
    return C if isinstance(C, FlagSpec) else FlagSpec(tuple(C))


@dataclass(frozen=True)
class DefectReport:
    ehrhart: Poly2
    hilbert: Poly2
    k0: int
    is_normal: bool
    polygon: OkounkovPolygon

    @property
    def defect(self) -> Poly2:
        """Hilbert minus Ehrhart polynomial of ``k0 D``; zero iff normal."""
        e, h = self.ehrhart, self.hilbert
        return Poly2(h.a2 - e.a2, h.a1 - e.a1, h.a0 - e.a0)

    def to_json(self) -> dict:
        return {
            "k0": self.k0,
            "ehrhart": self.ehrhart.to_json(),
            "hilbert": self.hilbert.to_json(),
            "defect": self.defect.to_json(),
            "is_normal": self.is_normal,
            "polygon": self.polygon.to_json(),
        }


def normal_defect_report(S: SurfaceModel, D: Sequence, C) -> DefectReport:
    """Compare the Ehrhart polynomial of ``k0 Delta`` with the Hilbert polynomial of ``k0 D``."""
    polygon = okounkov_polygon(S, D, _flag(C))
    k0, integral = scale_to_integral(polygon)
    ehrhart = ehrhart_polynomial(integral)
    hilbert = hilbert_polynomial(S, D).rescaled(k0)
    return DefectReport(ehrhart, hilbert, k0, ehrhart == hilbert, polygon)
