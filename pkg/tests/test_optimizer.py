import itertools

import pytest

from toricdeg import reference
from toricdeg.ehrhart import normalized_surface_area
from toricdeg.errors import NotBigError, TheoryLimitedError
from toricdeg.lattice import intersect, is_nef, make_surface
from toricdeg.okounkov import okounkov_polygon
from toricdeg.ehrhart import surface_area_of
from toricdeg.optimizer import (
    NEF,
    NEGATIVE,
    enumerate_nef_candidates,
    optimize,
    plane_model_candidate,
)
from toricdeg.zariski import positive_part

X5 = make_surface("X5")


def brute_nef(S, P, bound, max_degree=8):
    out = []
    for a in range(0, max_degree + 1):
        for bs in itertools.product(range(-a - 1, 2), repeat=S.r):
            xi = (a,) + bs
            if any(xi) and is_nef(S, xi) and 0 < intersect(S, P, xi) <= bound:
                out.append(xi)
    return sorted(out)


@pytest.mark.parametrize("row", reference.X5_TABLE, ids=lambda r: str(r["divisor"]))
def test_table_rows(row):
    res = optimize(X5, row["divisor"])
    assert res.optimum == row["optimum"]
    assert set(res.curves_of_kind(NEGATIVE)) == set(X5.negative_curves)
    assert set(res.curves_of_kind(NEF)) == set(row["nef"])
    assert res.hilbert_second == row["second"]
    assert res.induces_normal


def test_strict_rule_drops_multiples_of_conics():
    res = optimize(X5, (6, -1, -1, -2, -3, -4), rule="strict")
    loose = optimize(X5, (6, -1, -1, -2, -3, -4))
    dropped = set(loose.curves_of_kind(NEF)) - set(res.curves_of_kind(NEF))
    assert dropped == {(4, -2, 0, -2, -2, -2), (4, 0, -2, -2, -2, -2)}
    assert res.optimum == loose.optimum


@pytest.mark.parametrize("index", [0, 4])
def test_completeness_by_brute_force(index):
    row = reference.X5_TABLE[index]
    P = positive_part(X5, row["divisor"])
    opt = row["optimum"]
    optimal = set()
    for xi in brute_nef(X5, P, opt):
        if plane_model_candidate(X5, xi) and surface_area_of(okounkov_polygon(X5, P, xi, check_curve=False)) == opt:
            optimal.add(xi)
    assert optimal == set(optimize(X5, row["divisor"]).curves_of_kind(NEF))


def test_enumerate_candidates():
    assert enumerate_nef_candidates(X5, X5.anticanonical, 0) == []
    got = enumerate_nef_candidates(X5, X5.anticanonical, 2)
    assert got == brute_nef(X5, X5.anticanonical, 2)
    # on X5 these are exactly the 10 conic classes
    assert len(got) == 10
    assert all(intersect(X5, xi, xi) == 0 for xi in got)
    P = (5, -1, -1, -2, -2, -3)
    cands = enumerate_nef_candidates(X5, P, 6)
    assert (1, 0, 0, -1, 0, 0) in cands
    assert cands == brute_nef(X5, P, 6)


def test_every_reported_class_attains_optimum():
    res = optimize(X5, (7, -4, 0, -2, -3, -3))
    for curve, kind in res.optimal_curves:
        if kind == NEGATIVE:
            assert normalized_surface_area(X5, res.divisor, curve) == res.optimum
        assert surface_area_of(okounkov_polygon(X5, res.positive, curve, check_curve=False)) == res.optimum


def test_deterministic_and_sorted():
    a = optimize(X5, (4, -1, -1, -1, 0, -1))
    b = optimize(X5, (4, -1, -1, -1, 0, -1))
    assert a == b
    for kind in (NEF, NEGATIVE):
        assert a.curves_of_kind(kind) == sorted(a.curves_of_kind(kind))


def test_other_surfaces():
    S6 = make_surface("S6")
    res = optimize(S6, (4,) + (-1,) * 6)
    assert res.optimum == 6 and res.induces_normal
    assert ((2,) + (-1,) * 6, NEGATIVE) in res.optimal_curves
    L3 = make_surface("L3")
    res = optimize(L3, (4, -1, -1, -1, -1))
    assert res.optimum == 8 and res.induces_normal


def test_errors():
    with pytest.raises(TheoryLimitedError):
        optimize(make_surface("X7"), (3,) + (-1,) * 7)
    with pytest.raises(NotBigError):
        optimize(X5, (1, -1, 0, 0, 0, 0))
