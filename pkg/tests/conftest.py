import pytest
from hypothesis import strategies as st

from loopforge.core import Permutation, cyclic_group, direct_product, symmetric_group_3
from loopforge.enumeration import enumerate_loops

LOOPS_UP_TO_5 = [L for n in range(1, 6) for L in enumerate_loops(n)]


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def z4():
    return cyclic_group(4)


@pytest.fixture
def klein():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture
def s3():
    return symmetric_group_3()


@pytest.fixture(scope="session")
def small_loops():
    return LOOPS_UP_TO_5


@pytest.fixture(scope="session")
def loops6():
    return list(enumerate_loops(6))


def permutations_of(n):
    return st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p)))


# A reduced loop of order <= 5, relabeled at random so the identity need not be 0.
small_loop = st.sampled_from(LOOPS_UP_TO_5)


@st.composite
def relabeled_loop(draw):
    L = draw(small_loop)
    return L.relabel(draw(permutations_of(L.n)))


@st.composite
def loop_with_elements(draw, count=2):
    L = draw(relabeled_loop())
    xs = tuple(draw(st.integers(0, L.n - 1)) for _ in range(count))
    return (L,) + xs
