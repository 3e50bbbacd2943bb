from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibercone.errors import InfiniteApery, InvalidSpec, NotInSemigroup
from fibercone.semigroup import (
    NumericalSemigroup,
    apery_set,
    cn_criterion,
    cn_is_cm,
    cn_is_cm_curve,
    curve_vectors,
    minimal_second_coordinates,
    ns_contains,
    symmetric_vectors,
)


def coprime_pairs(bmax):
    return [(a, b) for b in range(2, bmax + 1) for a in range(1, b) if gcd(a, b) == 1]


def test_membership():
    S = NumericalSemigroup([3, 4, 6])
    assert ns_contains(S, 10) and 10 in S
    assert 5 not in S
    assert 0 in S and -1 not in S


def test_apery_examples():
    assert apery_set(NumericalSemigroup([3, 4, 6]), 6).sorted() == [0, 3, 4, 7, 8, 11]
    assert apery_set(NumericalSemigroup([2, 3, 5]), 5).sorted() == [0, 2, 3, 4, 6]
    assert apery_set(NumericalSemigroup([2, 5]), 5).sorted() == [0, 2, 4, 6, 8]


def test_apery_errors():
    with pytest.raises(InfiniteApery):
        apery_set(NumericalSemigroup([2, 4]), 4)
    with pytest.raises(NotInSemigroup):
        apery_set(NumericalSemigroup([3, 5]), 4)
    with pytest.raises(InvalidSpec):
        NumericalSemigroup([0, 3])


def test_apery_closed_form():
    for a, b in coprime_pairs(12):
        ap = apery_set(NumericalSemigroup([a, b, a + b]), a + b)
        expected = {i * a for i in range(b)} | {j * b for j in range(1, a + 1)}
        assert ap.elements == expected, (a, b)


@given(st.lists(st.integers(1, 15), min_size=1, max_size=4), st.integers(0, 3))
def test_apery_matches_definition(gens, pick):
    S = NumericalSemigroup(gens)
    if S.gcd != 1:
        return
    a = S.generators[pick % len(S.generators)]
    ap = apery_set(S, a)
    assert len(ap.elements) == a
    assert {e % a for e in ap.elements} == set(range(a))
    top = max(ap.elements)
    literal = {s for s in range(top + 1) if s in S and (s - a) not in S}
    assert ap.elements == literal


def test_equigenerated_criterion():
    for a, b in coprime_pairs(10):
        ok, diag = cn_is_cm((a, b, a + b))
        assert ok == (b == a + 1), (a, b)
        assert cn_is_cm_curve((a, b, a + b))[0] == ok


def test_spot_values():
    assert cn_is_cm((3, 4, 7))[0]
    assert not cn_is_cm((2, 5, 7))[0]
    ok, diag = cn_is_cm((3, 4, 6))
    assert not ok
    assert diag.mu_of(8) == 6 and 6 not in diag.B2
    assert (8, 6) in diag.offending


def test_curve_construction_differs_off_the_equigenerated_line():
    ok, diag = cn_is_cm_curve((3, 4, 6))
    assert ok and diag.mu_of(8) == 4
    assert set(curve_vectors((3, 4, 7))) == set(symmetric_vectors((3, 4, 7)))
    assert set(curve_vectors((3, 4, 6))) != set(symmetric_vectors((3, 4, 6)))


def test_decompositions_reproduce_pairs():
    for ns in [(3, 4, 7), (2, 5, 7), (3, 4, 6), (1, 3, 6)]:
        _, diag = cn_is_cm(ns)
        gens = set(diag.vectors)
        for nu, mu in diag.pairs:
            parts = diag.decompositions[nu]
            assert all(p in gens for p in parts)
            assert (sum(p[0] for p in parts), sum(p[1] for p in parts)) == (nu, mu)


def test_minimal_second_coordinates_brute_force():
    vectors = symmetric_vectors((3, 4, 6))
    best, _ = minimal_second_coordinates(vectors, 20)
    steps = [v for v in vectors if v[0] > 0]
    # brute force: all sums of at most 8 steps
    reach = {(0, 0)}
    for _ in range(8):
        reach |= {(p[0] + v[0], p[1] + v[1]) for p in reach for v in steps if p[0] + v[0] <= 20}
    for nu in range(21):
        cands = [mu for n, mu in reach if n == nu]
        assert best[nu] == (min(cands) if cands else None)


def test_criterion_needs_pure_vectors():
    with pytest.raises(InvalidSpec):
        cn_criterion([(3, 1), (0, 4)])
    with pytest.raises(InfiniteApery):
        cn_is_cm((2, 4, 6))
