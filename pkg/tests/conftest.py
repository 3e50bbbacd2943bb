import pytest
from hypothesis import strategies as st

from fibercone.corpus import corpus
from fibercone.monomial import make_ideal

EX22 = [(10, 0), (9, 2), (8, 4), (7, 5), (6, 6), (5, 7), (4, 8), (2, 9), (0, 10)]
CONVEX_EX = [(12, 0), (8, 1), (5, 2), (2, 3), (0, 4)]


@pytest.fixture
def ex22():
    return make_ideal(EX22)


@pytest.fixture
def convex_ex():
    return make_ideal(CONVEX_EX)


@pytest.fixture(scope="session")
def random_corpus():
    return corpus(50, 50, seed=2024)


exponent_vectors = st.tuples(st.integers(0, 12), st.integers(0, 12))
generator_lists = st.lists(exponent_vectors, min_size=1, max_size=6)


@st.composite
def normalized_ideals(draw, min_size=2, max_size=6):
    """Ideals with a pure x-power and a pure y-power among the generators."""
    inner = draw(st.lists(st.tuples(st.integers(1, 10), st.integers(1, 10)), max_size=max_size - 2))
    a = draw(st.integers(1, 12))
    b = draw(st.integers(1, 12))
    I = make_ideal([(a, 0), (0, b), *inner])
    return I
