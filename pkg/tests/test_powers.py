import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibercone.corpus import random_concave, random_convex
from fibercone.errors import NotApplicable, NotASubideal
from fibercone.monomial import make_ideal, multiply, power
from fibercone.powers import (
    concave_power_gens,
    convex_power_blocks,
    convex_power_gens,
    default_reduction_bound,
    detect_pure_power,
    is_reduction_witness,
    power_shape_report,
    pure_power_reduction,
    reduction_number,
)
from fibercone.shape import classify_shape

EX24_OTHER = [(7, 0), (6, 4), (5, 7), (3, 10), (0, 13)]
EX24_PRODUCT = [
    (17, 0), (16, 2), (15, 4), (14, 5), (13, 6), (12, 7), (11, 8),
    (9, 9), (7, 10), (6, 14), (5, 17), (3, 20), (2, 22), (0, 23),
]
CONVEX_OTHER = [(13, 0), (7, 2), (3, 6), (1, 12), (0, 20)]
CONVEX_PRODUCT = [
    (25, 0), (21, 1), (18, 2), (15, 3), (12, 4), (9, 5),
    (7, 6), (5, 9), (3, 10), (1, 16), (0, 24),
]


def test_concave_closed_form_ex22(ex22):
    G = concave_power_gens(ex22, 2)
    assert len(G) == 17
    assert G == power(ex22, 2).gens


def test_closed_form_small_cases():
    I = make_ideal([(2, 0), (1, 1), (0, 2)])
    assert len(concave_power_gens(I, 3)) == 7
    J = make_ideal([(3, 0), (2, 1), (0, 2)])
    assert concave_power_gens(J, 2) == power(J, 2).gens
    K = make_ideal([(3, 0), (1, 1), (0, 3)])
    assert [tuple(u) for u in convex_power_gens(K, 2)] == [(6, 0), (4, 1), (2, 2), (1, 4), (0, 6)]
    assert convex_power_gens(K, 1) == K.gens


def test_convex_closed_form(convex_ex):
    G = convex_power_gens(convex_ex, 2)
    assert len(G) == 9 and G == power(convex_ex, 2).gens
    blocks = convex_power_blocks(convex_ex, 3)
    u = convex_ex.gens
    for i, (b1, b2) in enumerate(zip(blocks, blocks[1:])):
        assert b1 & b2 == {u[i + 1].scale(3)}


def test_wrong_shape_refused(ex22, convex_ex):
    with pytest.raises(NotApplicable):
        convex_power_gens(ex22, 2)
    with pytest.raises(NotApplicable):
        concave_power_gens(convex_ex, 2)


def test_product_closure_failures(ex22, convex_ex):
    other = make_ideal(EX24_OTHER)
    assert classify_shape(other).is_concave
    P = multiply(ex22, other)
    assert P.pairs() == EX24_PRODUCT
    assert not classify_shape(P).is_concave
    Q = multiply(convex_ex, make_ideal(CONVEX_OTHER))
    assert Q.pairs() == CONVEX_PRODUCT
    assert not classify_shape(Q).is_convex


def test_reduction_numbers(ex22):
    assert reduction_number(ex22).reduction_number == 1
    I = make_ideal([(7, 0), (4, 3), (3, 4), (0, 7)])
    assert reduction_number(I).reduction_number == 3
    assert default_reduction_bound(I) == 8


def test_reduction_failure_witness():
    I = make_ideal([(8, 0), (4, 3), (3, 4), (0, 8)])
    J = pure_power_reduction(I)
    R = reduction_number(I, J, 4)
    assert R.reduction_number is None and R.witness[0] == 5
    # the witness in degree 2 named in the literature and the lex-largest one
    assert is_reduction_witness(I, J, 2, (7, 7))
    assert R.witnesses[2] == (8, 6)
    assert is_reduction_witness(I, J, 2, R.witnesses[2])
    assert all(is_reduction_witness(I, J, k, u) for k, u in R.witnesses.items())


def test_reduction_errors(ex22):
    with pytest.raises(NotASubideal):
        reduction_number(ex22, make_ideal([(1, 0), (0, 1)]))
    with pytest.raises(ValueError):
        reduction_number(ex22, bound=0)


def test_detect_pure_power(ex22):
    assert detect_pure_power(make_ideal([(2, 0), (1, 1), (0, 2)])) == (1, 1, 2)
    assert detect_pure_power(make_ideal([(6, 0), (4, 2), (2, 4), (0, 6)])) == (2, 2, 3)
    assert detect_pure_power(ex22) is None
    with pytest.raises(NotApplicable):
        detect_pure_power(make_ideal([(9, 0), (5, 3), (3, 5), (0, 9)]))


def test_power_shapes(ex22, convex_ex):
    shapes = dict(power_shape_report(ex22, 3))
    assert not shapes[2].is_concave and not shapes[3].is_concave
    assert all(r.is_convex for _, r in power_shape_report(convex_ex, 3))
    pure = power_shape_report(make_ideal([(2, 0), (1, 1), (0, 2)]), 3)
    assert all(r.is_concave and r.is_convex for _, r in pure)


@given(st.integers(0, 10**6), st.integers(1, 5))
@settings(max_examples=40)
def test_concave_law(seed, k):
    I = random_concave(random.Random(seed), m_max=6, emax=30)
    Ik = power(I, k)
    assert concave_power_gens(I, k) == Ik.gens
    assert Ik.mu == (I.mu - 1) * k + 1
    J = pure_power_reduction(I)
    assert multiply(J, Ik) == power(I, k + 1)


@given(st.integers(0, 10**6), st.integers(1, 4))
@settings(max_examples=40)
def test_convex_law(seed, k):
    I = random_convex(random.Random(seed), m_max=6, emax=30)
    assert convex_power_gens(I, k) == power(I, k).gens
    u = I.gens
    for i in range(len(u)):
        for j in range(i + 2, len(u)):
            assert (u[i + 1] + u[j - 1]).divides(u[i] + u[j])
    r = classify_shape(I)
    J = pure_power_reduction(I)
    for corner in r.corner_indices[1:-1]:
        assert is_reduction_witness(I, J, k + 1, u[corner - 1].scale(k + 1))
