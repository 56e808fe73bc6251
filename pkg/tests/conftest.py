from pathlib import Path

import pytest

from osgkit.core import from_order_pairs, parse
from osgkit.enumeration import enumerate_structures

DATA = Path(__file__).parent / "data"


def mk(names, table, pairs=()):
    return from_order_pairs(names, table, pairs)


@pytest.fixture(scope="session")
def worked_example():
    """Right-zero multiplication on {a, e, f} with a below e and f."""
    return parse((DATA / "worked_example.osg").read_text(), label="worked_example")


@pytest.fixture(scope="session")
def right_zero2():
    return mk(("e", "f"), [[0, 1], [0, 1]])


@pytest.fixture(scope="session")
def left_zero2():
    return mk(("e", "f"), [[0, 0], [1, 1]])


@pytest.fixture(scope="session")
def meet2():
    """Two-point meet semilattice, discrete order."""
    return mk(("0", "1"), [[0, 0], [0, 1]])


@pytest.fixture(scope="session")
def meet2_chain():
    """Two-point meet semilattice ordered 0 <= 1."""
    return mk(("0", "1"), [[0, 0], [0, 1]], [(0, 1)])


@pytest.fixture(scope="session")
def nonregular2():
    """a·a = b and every other product b; not regular, discrete order."""
    return mk(("a", "b"), [[1, 1], [1, 1]])


@pytest.fixture(scope="session")
def trivial():
    return mk(("x",), [[0]])


@pytest.fixture(scope="session")
def corpus2():
    return list(enumerate_structures(1)) + list(enumerate_structures(2))


@pytest.fixture(scope="session")
def corpus3(corpus2):
    return corpus2 + list(enumerate_structures(3))
