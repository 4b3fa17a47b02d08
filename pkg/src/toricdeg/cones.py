"""Rational polyhedral cones with exact integer arithmetic.

Conventions: facets are *inner* normals, i.e. a cone is ``{x : f . x >= 0}``
for all of its facets ``f``.  Rays and facets are primitive integer tuples.

The core routine :func:`generators_of` is the double description method: it
turns an H-representation ``{x : A x >= 0}`` into extreme rays plus a basis of
the lineality space.  Rows are inserted in lexicographic order and new rays are
formed only from adjacent pairs (combinatorial adjacency test).
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Callable, Iterable, Sequence

from . import lp
from .linalg import dot, nullspace, primitive, rank, solve

IntVector = tuple[int, ...]


def _scaled_combination(a: int, u: Sequence[int], b: int, v: Sequence[int]) -> IntVector:
    return primitive([a * x + b * y for x, y in zip(u, v)])


def generators_of(inequalities: Sequence[Sequence[int]], dim: int) -> tuple[list[IntVector], list[IntVector]]:
    """Extreme rays and lineality basis of ``{x in R^dim : a . x >= 0}``.

    Rays are returned modulo the lineality space; when the cone is pointed the
    lineality basis is empty and the rays are canonical.
    """
    rows = sorted({primitive(a) for a in inequalities if any(a)})
    lineality: list[IntVector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[IntVector] = []
    processed: list[IntVector] = []

    for a in rows:
        hit = next((i for i, l in enumerate(lineality) if dot(a, l) != 0), None)
        if hit is not None:
            l0 = lineality.pop(hit)
            s0 = dot(a, l0)
            if s0 < 0:
                l0, s0 = tuple(-x for x in l0), -s0
            lineality = [_scaled_combination(s0, l, -dot(a, l), l0) for l in lineality]
            rays = [_scaled_combination(s0, r, -dot(a, r), l0) if dot(a, r) else r for r in rays]
            rays.append(l0)
            processed.append(a)
            continue

        values = [dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, values) if v > 0]
        neg = [r for r, v in zip(rays, values) if v < 0]
        zero = [r for r, v in zip(rays, values) if v == 0]
        if neg:
            zsets = {r: frozenset(j for j, b in enumerate(processed) if dot(b, r) == 0) for r in rays}
            new = []
            for p in pos:
                for q in neg:
                    common = zsets[p] & zsets[q]
                    if any(r != p and r != q and common <= zsets[r] for r in rays):
                        continue
                    new.append(_scaled_combination(dot(a, p), q, -dot(a, q), p))
            rays = pos + zero + new
        processed.append(a)
    return sorted(set(rays)), lineality


@dataclass(frozen=True)
class RationalCone:
    """A cone stored by both of its representations.

    ``equations`` spans the orthogonal complement of the cone's linear span;
    ``lineality`` spans the largest linear subspace contained in the cone.
    Both are empty for the full-dimensional pointed cones used in this package.
    """

    dim: int
    rays: tuple[IntVector, ...]
    facets: tuple[IntVector, ...]
    equations: tuple[IntVector, ...] = ()
    lineality: tuple[IntVector, ...] = ()

    def contains(self, x: Sequence) -> bool:
        return all(dot(f, x) >= 0 for f in self.facets) and all(dot(e, x) == 0 for e in self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    def incidence(self) -> list[frozenset[int]]:
        """For each facet, the indices of the rays it contains."""
        return [frozenset(i for i, r in enumerate(self.rays) if dot(f, r) == 0) for f in self.facets]

    def facet_matrix(self) -> list[list[int]]:
        return [list(f) for f in self.facets]


def _canonical_modulo(vectors, subspace):
    """Primitive representatives of ``vectors`` projected orthogonally to ``subspace``."""
    if not subspace:
        return [tuple(v) for v in vectors]
    gram = [[dot(u, w) for w in subspace] for u in subspace]
    out = []
    for v in vectors:
        coeffs = solve(gram, [dot(v, u) for u in subspace])
        proj = [Fraction(x) - sum(c * u[i] for c, u in zip(coeffs, subspace)) for i, x in enumerate(v)]
        if any(proj):
            out.append(primitive(proj))
    return out


def dual_and_minimize(rays: Iterable[Sequence[int]]) -> RationalCone:
    """Cone generated by ``rays``: minimal facets and extremal rays."""
    rays = [tuple(int(x) for x in r) for r in rays]
    rays = [r for r in rays if any(r)]
    if not rays:
        raise ValueError("zero-dimensional cone: no nonzero generators")
    dim = len(rays[0])
    facets, equations = generators_of(rays, dim)
    facets = sorted(set(_canonical_modulo(facets, equations)))
    ineqs = list(facets) + list(equations) + [tuple(-x for x in e) for e in equations]
    extreme, lineality = generators_of(ineqs, dim)
    extreme = sorted(set(_canonical_modulo(extreme, lineality)))
    return RationalCone(dim, tuple(extreme), tuple(facets), tuple(equations), tuple(lineality))


def cone_from_inequalities(inequalities: Iterable[Sequence[int]], dim: int) -> RationalCone:
    ineqs = [tuple(int(x) for x in a) for a in inequalities]
    extreme, lineality = generators_of(ineqs, dim)
    if lineality:
        extreme = sorted(set(_canonical_modulo(extreme, lineality)))
    return dual_and_minimize(list(extreme) + list(lineality) + [tuple(-x for x in l) for l in lineality]) \
        if lineality else dual_and_minimize(extreme)


# --------------------------------------------------------------------------
# triangulation and lattice points


def _subfacets(face: frozenset[int], face_rank: int, incidence, rays) -> list[frozenset[int]]:
    out = set()
    for inc in incidence:
        sub = face & inc
        if sub == face or not sub:
            continue
        if rank([rays[i] for i in sub]) == face_rank - 1:
            out.add(sub)
    return list(out)


def triangulate(cone: RationalCone) -> list[tuple[int, ...]]:
    """Pulling triangulation; simplices are tuples of indices into ``cone.rays``.

    Requires a pointed, full-dimensional cone.
    """
    if not (cone.is_pointed and cone.is_full_dimensional):
        raise ValueError("triangulation needs a pointed full-dimensional cone")
    rays = cone.rays
    incidence = cone.incidence()

    def pull(face: frozenset[int], face_rank: int) -> list[frozenset[int]]:
        if len(face) == face_rank:
            return [face]
        apex = min(face)
        simplices = []
        for sub in sorted(_subfacets(face, face_rank, incidence, rays), key=sorted):
            if apex in sub:
                continue
            simplices.extend(s | {apex} for s in pull(sub, face_rank - 1))
        return simplices

    full = frozenset(range(len(rays)))
    return sorted(tuple(sorted(s)) for s in pull(full, cone.dim))


def parallelepiped_points(generators: Sequence[Sequence[int]]) -> list[IntVector]:
    """Lattice points of the half-open parallelepiped spanned by a basis of R^n."""
    n = len(generators)
    cols = [[generators[j][i] for j in range(n)] for i in range(n)]

    def reduce(x):
        lam = solve(cols, x)
        frac = [l - floor(l) for l in lam]
        return tuple(int(sum(f * generators[j][i] for j, f in enumerate(frac))) for i in range(n))

    start = (0,) * n
    seen = {start}
    queue = deque([start])
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    while queue:
        p = queue.popleft()
        for e in units:
            q = reduce([a + b for a, b in zip(p, e)])
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return sorted(seen)


def lattice_points(cone: RationalCone, grading: Sequence[int], bound: int) -> list[IntVector]:
    """All lattice points ``x`` of the cone with ``grading . x <= bound``.

    Enumerated as ``p + sum n_i r_i`` over the simplices of a triangulation,
    ``p`` running through the fundamental parallelepiped.
    """
    degrees = [dot(grading, r) for r in cone.rays]
    if any(d <= 0 for d in degrees):
        raise ValueError("grading is not positive on the cone")
    found = set()
    for simplex in triangulate(cone):
        gens = [cone.rays[i] for i in simplex]
        gdeg = [degrees[i] for i in simplex]
        for p in parallelepiped_points(gens):
            budget = bound - dot(grading, p)
            if budget < 0:
                continue
            for combo in _bounded_combinations(gdeg, budget):
                x = list(p)
                for n_i, g in zip(combo, gens):
                    if n_i:
                        for k in range(len(x)):
                            x[k] += n_i * g[k]
                found.add(tuple(x))
    return sorted(found, key=lambda x: (dot(grading, x), x))


def _bounded_combinations(degrees: Sequence[int], budget: int):
    """Nonnegative integer vectors ``n`` with ``sum n_i * degrees[i] <= budget``."""
    if not degrees:
        yield ()
        return
    head, rest = degrees[0], degrees[1:]
    for k in range(budget // head + 1):
        for tail in _bounded_combinations(rest, budget - k * head):
            yield (k,) + tail


def positive_grading(cone: RationalCone) -> IntVector:
    """An integral linear form that is positive on every extremal ray (by LP)."""
    if not cone.is_pointed:
        raise ValueError("no positive grading: the cone contains a line")
    # maximise nothing; require g . r >= 1 for each ray
    n = cone.dim
    res = lp.linprog(
        [0] * n,
        A_ub=[[-x for x in r] for r in cone.rays],
        b_ub=[-1] * len(cone.rays),
        free=True,
    )
    if not res.feasible:
        raise ValueError("no positive grading found")
    return primitive(res.x)


@dataclass(frozen=True)
class HilbertCheck:
    verified: bool
    degree_bound: int
    witness: IntVector | None = None
    missing: tuple[IntVector, ...] = field(default=())
    points_checked: int = 0


def _representable_set(generators, grading, bound) -> set[IntVector]:
    gens = sorted({tuple(g) for g in generators if any(g)})
    degs = [dot(grading, g) for g in gens]
    if any(d <= 0 for d in degs):
        raise ValueError("grading is not positive on the generators")
    zero = (0,) * len(gens[0])
    reached = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            dx = dot(grading, x)
            for g, d in zip(gens, degs):
                if dx + d <= bound:
                    y = tuple(a + b for a, b in zip(x, g))
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
        frontier = nxt
    return reached


def hilbert_basis_check(
    cone: RationalCone,
    generators: Sequence[Sequence[int]],
    degree_bound: int = 6,
    grading: Sequence[int] | None = None,
) -> HilbertCheck:
    """Check that ``generators`` span every lattice point of degree <= bound.

    Returns the first unrepresentable point (lowest degree, then lexicographic)
    as ``witness`` when the check fails.
    """
    if grading is None:
        grading = positive_grading(cone)
    for g in generators:
        if not cone.contains(g):
            raise ValueError(f"generator {tuple(g)} is not in the cone")
    points = lattice_points(cone, grading, degree_bound)
    reached = _representable_set(generators, grading, degree_bound)
    for x in points:
        if x not in reached:
            return HilbertCheck(False, degree_bound, witness=x, points_checked=len(points))
    return HilbertCheck(True, degree_bound, points_checked=len(points))


def complete_generators(
    cone: RationalCone,
    generators: Sequence[Sequence[int]],
    degree_bound: int,
    grading: Sequence[int],
) -> tuple[list[IntVector], list[IntVector]]:
    """Add lattice points until every point up to ``degree_bound`` is representable.

    Returns ``(all generators, newly added ones)``.
    """
    gens = [tuple(g) for g in generators]
    added: list[IntVector] = []
    points = lattice_points(cone, grading, degree_bound)
    reached = _representable_set(gens, grading, degree_bound)
    for x in points:
        if x in reached:
            continue
        gens.append(x)
        added.append(x)
        reached = _representable_set(gens, grading, degree_bound)
    return gens, added


def hilbert_basis_full_check(
    cone: RationalCone, generators: Sequence[Sequence[int]], max_determinant: int = 10**4
) -> HilbertCheck:
    """Degree-free check via the fundamental parallelepipeds of a triangulation.

    Valid when the extremal rays are among ``generators``: then every lattice
    point is ``p + (ray combination)`` with ``p`` in some parallelepiped, so it
    suffices that every such ``p`` is representable.
    """
    from .linalg import det

    gens = {tuple(g) for g in generators}
    if not set(cone.rays) <= gens:
        raise ValueError("full check needs all extremal rays among the generators")
    grading = positive_grading(cone)
    simplices = triangulate(cone)
    candidates = set()
    for simplex in simplices:
        basis = [cone.rays[i] for i in simplex]
        if abs(det(basis)) > max_determinant:
            raise ValueError("triangulation determinant above the configured limit")
        candidates.update(p for p in parallelepiped_points(basis) if any(p))
    if not candidates:
        return HilbertCheck(True, -1, points_checked=0)
    top = max(dot(grading, p) for p in candidates)
    reached = _representable_set(gens, grading, top)
    for p in sorted(candidates, key=lambda x: (dot(grading, x), x)):
        if p not in reached:
            return HilbertCheck(False, top, witness=p, points_checked=len(candidates))
    return HilbertCheck(True, top, points_checked=len(candidates))


@lru_cache(maxsize=None)
def _nef_rays_cached(S) -> tuple[IntVector, ...]:
    # D nef  <=>  (gram C) . D >= 0 for every effective generator C
    ineqs = [[g * c for g, c in zip(S.diagonal, C)] for C in S.effective_generators]
    rays, lineality = generators_of(ineqs, S.rank)
    if lineality:
        raise ValueError(f"nef cone of {S.name} is not pointed")
    return tuple(sorted(rays))


def nef_extremal_rays(S) -> list[IntVector]:
    """Extremal rays of the nef cone (dual of the effective cone)."""
    return list(_nef_rays_cached(S))
