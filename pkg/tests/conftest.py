from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hyperfuzz import FuzzySubset, HyperGroupoid, full, left_zero, right_zero

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@pytest.fixture
def lz():
    return left_zero("ab")


@pytest.fixture
def rz():
    return right_zero("ab")


@pytest.fixture
def H2():
    return full("ab")


@pytest.fixture
def mixed():
    # a o a = {a}, a o b = {a, b}, b o a = {b}, b o b = {b}
    return HyperGroupoid.from_table([[{0}, {0, 1}], [{1}, {1}]], "ab")


@pytest.fixture
def nonassoc():
    # first non-associative table of the n=2 enumeration (index 3)
    return HyperGroupoid.from_table([[{0}, {0}], [{1}, {0}]], "ab")


@st.composite
def hypergroupoids(draw, max_size=4, min_size=1):
    n = draw(st.integers(min_size, max_size))
    masks = draw(st.lists(st.integers(1, 2 ** n - 1), min_size=n * n, max_size=n * n))
    return HyperGroupoid.from_masks(n, masks)


def grades(k=4):
    return st.integers(0, k).map(lambda i: Fraction(i, k))


@st.composite
def fuzzy_on(draw, h, k=4):
    return FuzzySubset(h, tuple(draw(grades(k)) for _ in h.elements))


@st.composite
def subsets(draw, h, nonempty=True):
    chosen = draw(st.sets(st.sampled_from(list(h.elements)), min_size=1 if nonempty else 0))
    return frozenset(chosen)
