import random
from fractions import Fraction
from functools import lru_cache

import pytest

from conftest import random_big
from toricdeg import reference
from toricdeg.cones import dual_and_minimize, hilbert_basis_full_check, nef_extremal_rays
from toricdeg.errors import HypothesisError, InvalidCurveClassError, UnverifiedSemigroupError
from toricdeg.global_body import (
    chamber_generators,
    cox_generators_report,
    describe_class,
    fiber,
    global_body,
    global_semigroup_generators,
)
from toricdeg.lattice import intersect, make_surface
from toricdeg.linalg import dot, rank
from toricdeg.okounkov import mu, numerical_fiber, okounkov_polygon

F = Fraction

FLAGS = {
    "X2": (0, 1, 0),
    "X3": (1, -1, -1, 0),
    "X4": (0, 0, 0, 1, 0),
    "X5": reference.X5_FLAG,
    "X6": (2, -1, -1, -1, -1, -1, 0),
    "L3": reference.L3_FLAG,
    "S6": (2, -1, -1, -1, -1, -1, -1),
}


@lru_cache(maxsize=None)
def body_for(name):
    return global_body(make_surface(name), FLAGS[name])


def test_chamber_generators():
    L3 = make_surface("L3")
    gens = chamber_generators(L3, reference.L3_FLAG)
    assert reference.L3_FLAG not in gens
    assert set(L3.negative_curves) - {reference.L3_FLAG} <= set(gens)
    assert (1, 0, 0, 0, -1) in gens
    X5 = make_surface("X5")
    gens = chamber_generators(X5, reference.X5_FLAG)
    assert len([g for g in gens if g in X5.negative_curves]) == 15
    assert len(gens) == 15 + len(nef_extremal_rays(X5))
    with pytest.raises(InvalidCurveClassError):
        chamber_generators(X5, (1, 0, 0, 0, 0, 0))


def test_l3_body():
    body = body_for("L3")
    assert (1, 0) + reference.L3_FLAG in body.raw_generators
    assert set(body.cone.rays) == set(reference.L3_RAYS)
    assert set(body.cone.facets) == set(reference.L3_FACETS)
    assert body.ambient_dim == 7


def test_x5_body():
    body = body_for("X5")
    assert len(body.cone.rays) == 22 and len(body.cone.facets) == 39
    printed = set(reference.X5_FACETS)
    assert set(body.cone.facets) in (printed, {tuple(-x for x in f) for f in printed})


@pytest.mark.parametrize("name", sorted(FLAGS))
def test_generator_membership(name):
    body = body_for(name)
    for g in body.raw_generators:
        assert body.cone.contains(g)
    for r in body.cone.rays:
        assert r in body.raw_generators
        tight = [f for f in body.cone.facets if dot(f, r) == 0]
        assert rank(tight) == body.ambient_dim - 1


@pytest.mark.parametrize("name", sorted(FLAGS))
def test_fiber_equals_polygon(name):
    S = make_surface(name)
    body = body_for(name)
    rng = random.Random(name)
    for _ in range(20):
        D = random_big(S, rng)
        assert fiber(body, D) == okounkov_polygon(S, D, FLAGS[name]).vertices


def test_fiber_of_non_effective_class_is_empty():
    assert fiber(body_for("X5"), (-1, 0, 0, 0, 0, 0)) == []


NON_BIG = [
    (0, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0),
    (1, 0, -1, 0, 0, 0),
    (2, -1, -1, -1, -1, 0),
    (0, 2, 0, 0, 0, 0),
    (1, 0, -1, -1, 0, 0),
    (2, 0, -2, 0, 0, 0),
    (1, 1, -1, 0, 0, 0),
    (0, 1, 1, 0, 0, 0),
]


@pytest.mark.parametrize("D", NON_BIG)
def test_numerical_fiber(D):
    S = make_surface("X5")
    C = (0, 1, 0, 0, 0, 0)
    body = global_body(S, C)
    got = numerical_fiber(S, D, C)
    assert got == fiber(body, D)
    if mu(S, D, C) == 0:
        top = intersect(S, D, C)
        assert got == ([(0, 0)] if top == 0 else [(0, 0), (0, top)])


def test_numerical_fiber_nef_segment():
    # D nef with D.C = 1 and mu = 0: the vertical segment {0} x [0, 1]
    S = make_surface("X5")
    assert numerical_fiber(S, (1, -1, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)) == [(0, 0), (0, 1)]


def test_numerical_fiber_hypothesis_check():
    S = make_surface("X6")
    with pytest.raises(HypothesisError):
        numerical_fiber(S, (1, -1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0))


def test_l3_semigroup_and_cox():
    S = make_surface("L3")
    body = body_for("L3")
    gens = global_semigroup_generators(body, 6)
    assert gens.verified and set(gens.generators) == set(reference.L3_RAYS)
    report = dict(cox_generators_report(S, body, gens))
    assert set(report) == set(S.negative_curves) | {reference.L3_COX_EXTRA}
    assert report[reference.L3_COX_EXTRA] == "strict transform of a general line through P_4"
    assert report[reference.L3_FLAG] == "flag curve"


def test_x5_semigroup_full_check():
    body = body_for("X5")
    assert global_semigroup_generators(body, 4).verified
    assert hilbert_basis_full_check(body.cone, body.cone.rays).verified
    report = cox_generators_report(make_surface("X5"), body, degree_bound=3)
    assert {c for c, _ in report} >= set(make_surface("X5").negative_curves)


def test_synthetic_semigroups():
    wedge = dual_and_minimize([(1, 0), (1, 2)])
    gens = global_semigroup_generators(wedge, 2)
    assert not gens.verified and gens.added == ((1, 1),)
    quad = dual_and_minimize([(1, 0), (0, 1)])
    assert set(global_semigroup_generators(quad, 4).generators) == {(1, 0), (0, 1)}


def test_unverified_semigroup_blocks_cox_report():
    wedge = dual_and_minimize([(1, 0), (1, 2)])
    gens = global_semigroup_generators(wedge, 2)
    with pytest.raises(UnverifiedSemigroupError):
        cox_generators_report(make_surface("L3"), body_for("L3"), gens)


def test_describe_class():
    S = make_surface("X5")
    assert describe_class(S, (1, 0, 0, 0, 0, 0)) == "pullback of a general line"
    assert describe_class(S, (2, -1, -1, 0, 0, 0)) == "strict transform of a general conic through P_1, P_2"
    assert "multiplicity 2" in describe_class(S, (3, -2, -1, -1, -1, -1))
