import random
from math import gcd

import pytest

from fibercone.errors import InvalidSpec, NotApplicable
from fibercone.monomial import is_symmetric, make_ideal
from fibercone.powers import reduction_number
from fibercone.presentation import hilbert_data, standard_monomial_count
from fibercone.monomial import powers
from fibercone.symmetric import (
    Symmetric4Report,
    Verdict,
    classify_symmetric4,
    large_c_relations,
    make_symmetric,
    r_value,
    shifted_family_check,
    small_c_relations,
    symmetric4,
    tiny_squares_ideal,
    tiny_squares_sequence,
    verify_35b_generators,
)


def coprime_triples(cmax):
    for c in range(3, cmax + 1):
        for b in range(2, c):
            for a in range(1, b):
                if gcd(gcd(a, b), c) == 1:
                    yield a, b, c


def test_make_symmetric():
    assert symmetric4(3, 5, 9).pairs() == [(9, 0), (5, 3), (3, 5), (0, 9)]
    assert make_symmetric((4, 0)).pairs() == [(4, 0), (0, 4)]
    assert make_symmetric((25, 20, 19, 5, 0)).pairs() == [(25, 0), (20, 5), (19, 19), (5, 20), (0, 25)]
    with pytest.raises(InvalidSpec):
        make_symmetric((5, 3, 1))
    with pytest.raises(InvalidSpec):
        make_symmetric((3, 5, 0))


def test_tiny_squares_sequence():
    assert tiny_squares_sequence(5) == [25, 20, 19, 5, 0]
    assert tiny_squares_sequence(6) == [30, 24, 23, 22, 6, 0]
    with pytest.raises(InvalidSpec):
        tiny_squares_sequence(4)
    for m in range(5, 12):
        I = tiny_squares_ideal(m)
        assert I.mu == m and is_symmetric(I)
        assert {u.degree for u in I.gens} == {5 * m, 7 * m + 3}
        # the square is generated in the single degree 10m
        assert {u.degree for u in powers(I, 2)[2].gens} == {10 * m}


def test_spot_verdicts():
    assert classify_symmetric4(3, 4, 6).verdict is Verdict.CM_SMALL_C
    assert classify_symmetric4(3, 4, 7).verdict is Verdict.CM_EQUIGEN
    assert classify_symmetric4(2, 5, 7).verdict is Verdict.NOT_CM_EQUIGEN
    r = classify_symmetric4(2, 7, 8)
    assert r.verdict is Verdict.UNKNOWN_INTERVAL and r.interval == (5, 12)
    assert classify_symmetric4(1, 3, 6).verdict is Verdict.CM_LARGE_C
    assert classify_symmetric4(3, 5, 9).verdict is Verdict.UNKNOWN_INTERVAL


def test_invalid_triples():
    with pytest.raises(InvalidSpec):
        classify_symmetric4(2, 4, 6)
    with pytest.raises(InvalidSpec):
        classify_symmetric4(4, 3, 7)


def test_r_value():
    assert r_value(2, 7) == 2
    assert r_value(3, 4) == 4
    assert r_value(2, 5) == 2


def test_attached_presentations():
    r = classify_symmetric4(3, 4, 6)
    assert r.presentation == ("z2*z3", "z2^2", "z3^2")
    r = classify_symmetric4(1, 3, 6)
    assert r.presentation == ("z1*z3", "z2*z4", "z1*z4")
    for k in range(7):
        assert standard_monomial_count(small_c_relations(), 4, k) == 3 * k + 1


def test_report_round_trip():
    for t in [(3, 4, 6), (1, 3, 6), (2, 7, 8), (3, 4, 7)]:
        r = classify_symmetric4(*t)
        assert Symmetric4Report.from_dict(r.to_dict()) == r


def test_shifted_family():
    r = shifted_family_check(2, 7, 8, 4)
    assert (r.a, r.b, r.c) == (6, 11, 12) and r.verdict is Verdict.CM_SMALL_C
    r = shifted_family_check(3, 5, 9, 3)
    assert (r.a, r.b, r.c, r.scale) == (3, 4, 6, 2)
    assert r.verdict is Verdict.CM_SMALL_C
    assert shifted_family_check(3, 4, 6, 0).verdict is Verdict.CM_SMALL_C


def test_large_c_generators():
    assert verify_35b_generators(1, 3, 6, 2)
    assert verify_35b_generators(1, 3, 6, 1)
    assert verify_35b_generators(2, 5, 13, 3)
    assert powers(symmetric4(1, 3, 6), 2)[2].mu == 7
    with pytest.raises(NotApplicable):
        verify_35b_generators(3, 4, 6, 2)
    with pytest.raises(NotApplicable):
        verify_35b_generators(1, 3, 6, 7)


def test_large_c_generators_exhaustive():
    for a, b, c in coprime_triples(20):
        if classify_symmetric4(a, b, c, verify=False).verdict is Verdict.CM_LARGE_C:
            for k in range(1, 5):
                assert verify_35b_generators(a, b, c, k), (a, b, c, k)


def test_reduction_family():
    for a in range(1, 6):
        I = make_symmetric((2 * a + 1, a + 1, a, 0))
        J = make_ideal([(2 * a + 1, 0), (0, 2 * a + 1)])
        assert reduction_number(I, J, 2 * a).reduction_number == a


def test_large_c_hilbert_numerator():
    # data fits 1 + 2(t + ... + t^(r-1)) over (1-t)^2
    for a, b, c in [(1, 3, 6), (2, 5, 13), (1, 2, 5), (3, 5, 20)]:
        r = r_value(a, b)
        H = hilbert_data(symmetric4(a, b, c), 2 * r + 4)
        assert H.numerator == (1, *([2] * (r - 1)))
        rels = large_c_relations(r)
        assert [standard_monomial_count(rels, 4, k) for k in range(len(H.mu_sequence))] == list(H.mu_sequence)


def test_small_scan_consistency():
    certified = {Verdict.CM_SMALL_C, Verdict.CM_LARGE_C, Verdict.CM_CONCAVE, Verdict.CM_CONVEX}
    for a, b, c in coprime_triples(30):
        rep = classify_symmetric4(a, b, c, verify=False)
        if rep.verdict in certified:
            H = hilbert_data(symmetric4(a, b, c), 2 * rep.r + 4)
            assert H.numerator is not None and min(H.numerator) >= 0, (a, b, c)
            mus = H.mu_sequence
            assert all(x < y for x, y in zip(mus, mus[1:])), (a, b, c)


def test_random_shifts():
    rng = random.Random(7)
    triples = list(coprime_triples(25))
    for a, b, c in rng.sample(triples, 20):
        m = max(c - 2 * a, 0)
        assert shifted_family_check(a, b, c, m).verdict is Verdict.CM_SMALL_C
