import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import SURFACES, random_effective
from toricdeg.errors import NotPseudoEffectiveError
from toricdeg.lattice import intersect, is_nef, make_surface
from toricdeg.linalg import is_negative_definite
from toricdeg.zariski import (
    integrality_bound,
    is_big,
    neg_set,
    null_set,
    positive_part,
    volume,
    zariski_decompose,
)


def check_invariants(S, D, dec):
    P = dec.positive
    assert is_nef(S, P)
    for c, a in dec.negative:
        assert a > 0
        assert intersect(S, P, c) == 0
    support = [c for c, _ in dec.negative]
    if support:
        assert is_negative_definite([[intersect(S, a, b) for b in support] for a in support])
    N = dec.negative_divisor()
    assert tuple(p + n for p, n in zip(P, N)) == tuple(Fraction(x) for x in D)


def test_x5_example():
    S = make_surface("X5")
    dec = zariski_decompose(S, (6, -1, -1, -2, -3, -4))
    assert dec.positive == (5, -1, -1, -2, -2, -3)
    assert dec.negative == (((1, 0, 0, 0, -1, -1), 1),)
    assert null_set(S, dec.positive) == {(1, 0, 0, -1, 0, -1), (1, 0, 0, 0, -1, -1)}


def test_exceptional_divisor_is_all_negative():
    S = make_surface("X5")
    dec = zariski_decompose(S, (0, 2, 0, 0, 0, 0))
    assert not any(dec.positive)
    assert dec.negative == (((0, 1, 0, 0, 0, 0), 2),)
    assert volume(S, (0, 2, 0, 0, 0, 0)) == 0 and not is_big(S, (0, 2, 0, 0, 0, 0))


def test_nef_divisor_is_its_own_positive_part():
    S = make_surface("S6")
    K = S.anticanonical
    assert positive_part(S, K) == K
    assert neg_set(S, K) == frozenset()


def test_minus_two_curve_gets_fractional_coefficient():
    S = make_surface("L3")
    # H - E_4 pushed towards the (-2)-line
    D = (2, -1, -1, -1, -1)
    dec = zariski_decompose(S, D)
    check_invariants(S, D, dec)
    assert dec.coefficient((1, -1, -1, -1, 0)) == Fraction(1, 2)


def test_not_pseudo_effective():
    S = make_surface("X4")
    with pytest.raises(NotPseudoEffectiveError):
        zariski_decompose(S, (-1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        null_set(S, (0, 1, 0, 0, 0))


def test_integrality_bound():
    assert integrality_bound(make_surface("X5")) == 1
    assert integrality_bound(make_surface("L3")) == 16
    assert integrality_bound(make_surface("S6")) == 64


@pytest.mark.parametrize("name", SURFACES)
@given(seed=st.integers(0, 10**6))
def test_random_invariants(name, seed):
    S = make_surface(name)
    D = random_effective(S, random.Random(seed))
    check_invariants(S, D, zariski_decompose(S, D))


@pytest.mark.parametrize("name", ["X3", "X5", "X6"])
@given(seed=st.integers(0, 10**6))
def test_integral_parts_on_blowups(name, seed):
    S = make_surface(name)
    D = random_effective(S, random.Random(seed), integral=True)
    dec = zariski_decompose(S, D)
    assert all(Fraction(x).denominator == 1 for x in dec.positive)


@given(seed=st.integers(0, 10**6), k=st.integers(2, 5))
def test_decomposition_is_homogeneous(seed, k):
    S = make_surface("S6")
    D = random_effective(S, random.Random(seed))
    assert zariski_decompose(S, tuple(k * x for x in D)) == zariski_decompose(S, D).scaled(k)
