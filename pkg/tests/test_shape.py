import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import normalized_ideals
from fibercone.corpus import random_concave, random_convex
from fibercone.errors import InternalInconsistency, NotApplicable, NotNormalized
from fibercone.monomial import make_ideal
from fibercone.shape import (
    ShapeReport,
    check_equidistance,
    classify_sequence,
    classify_shape,
    segment_membership,
    segment_slopes_distinct,
    vec_ge,
    vec_gt,
    vsum,
)


def test_ex22_corners(ex22):
    r = classify_shape(ex22)
    assert r.is_concave and not r.is_convex
    assert r.corner_indices == (1, 3, 7, 9)
    assert r.segments == ((1, 3), (3, 7), (7, 9))
    assert r.has_inner_corner


def test_equality_case_sets_both_flags():
    r = classify_shape(make_ideal([(2, 0), (1, 1), (0, 2)]))
    assert r.is_concave and r.is_convex
    assert r.corner_indices == (1, 3)
    assert not r.has_inner_corner


def test_neither():
    r = classify_shape(make_ideal([(9, 0), (5, 3), (3, 5), (0, 9)]))
    assert not r.classified
    assert r.segments == ()


def test_preconditions():
    with pytest.raises(NotApplicable):
        classify_shape(make_ideal([(3, 0)]))
    with pytest.raises(NotNormalized):
        classify_shape(make_ideal([(3, 1), (0, 2)]))


def test_segment_membership(ex22):
    seg = segment_membership(ex22, classify_shape(ex22))
    assert [seg[j] for j in (1, 2, 3)] == [(1, 3)] * 3
    assert [seg[j] for j in (4, 5, 6, 7)] == [(3, 7)] * 4
    assert [seg[j] for j in (8, 9)] == [(7, 9)] * 2


def test_segment_membership_trivial_segments():
    I = make_ideal([(3, 0), (2, 1), (0, 2)])
    r = classify_shape(I)
    assert r.is_concave and r.corner_indices == (1, 2, 3)
    assert segment_membership(I, r) == {1: (1, 2), 2: (1, 2), 3: (2, 3)}


def test_segment_membership_detects_bad_report(ex22):
    fake = ShapeReport(True, False, (1, 9), ((1, 9),), False)
    with pytest.raises(InternalInconsistency):
        segment_membership(ex22, fake)
    with pytest.raises(NotApplicable):
        segment_membership(ex22, ShapeReport(False, False, (1, 9), (), False))


def test_equidistance(ex22):
    assert check_equidistance(ex22, classify_shape(ex22))
    I = make_ideal([(4, 0), (2, 1), (0, 2)])
    assert check_equidistance(I, classify_shape(I))
    assert segment_slopes_distinct(ex22, classify_shape(ex22))


def test_report_round_trip(ex22):
    r = classify_shape(ex22)
    assert ShapeReport.from_dict(r.to_dict()) == r


def test_vector_order():
    assert vec_ge((2, 2), (2, 1)) and vec_gt((2, 2), (2, 1))
    assert not vec_gt((2, 2), (2, 2))
    assert vsum((1, 2), (3, 4)) == (4, 6)


def _interval_inequalities(vectors, corners, sign):
    m = len(vectors)
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            for k in range(1, m):
                if i - k < 1 or j + k > m:
                    continue
                lhs = vsum(vectors[i - 1], vectors[j - 1])
                rhs = vsum(vectors[i - k - 1], vectors[j + k - 1])
                if sign < 0:
                    lhs, rhs = rhs, lhs
                assert vec_ge(lhs, rhs)
                if any(i < r < j for r in corners):
                    assert vec_gt(lhs, rhs)


@given(st.integers(0, 10**6))
def test_concave_interval_inequalities(seed):
    import random

    I = random_concave(random.Random(seed), m_max=7, emax=40)
    r = classify_shape(I)
    assert r.is_concave
    _interval_inequalities(I.gens, r.corner_indices[1:-1], +1)


@given(st.integers(0, 10**6))
def test_convex_interval_inequalities(seed):
    import random

    I = random_convex(random.Random(seed), m_max=7, emax=40)
    r = classify_shape(I)
    assert r.is_convex
    _interval_inequalities(I.gens, r.corner_indices[1:-1], -1)


@given(normalized_ideals())
def test_classified_ideals_have_consistent_segments(I):
    r = classify_shape(I)
    assert r.corner_indices[0] == 1 and r.corner_indices[-1] == I.mu
    assert list(r.corner_indices) == sorted(set(r.corner_indices))
    if r.classified:
        segment_membership(I, r)
        assert check_equidistance(I, r)
        assert r.has_inner_corner == (len(r.corner_indices) > 2)
    if r.is_concave and r.is_convex:
        steps = {(u.a - v.a, u.b - v.b) for u, v in zip(I.gens, I.gens[1:])}
        assert len(steps) == 1


def test_classify_sequence_generic():
    assert classify_sequence([(0, 0), (1, 1), (2, 2)]).corner_indices == (1, 3)
