import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from specialmonoids import distinguish, make_presentation, make_tuple


@pytest.fixture(scope="session")
def bicyclic():
    return distinguish(make_tuple(make_presentation(2, [(1, 2)])))


@pytest.fixture(scope="session")
def z_monoid():
    # <a, b | ab = 1, ba = 1>: the group of integers as a monoid
    return distinguish(make_tuple(make_presentation(2, [(1, 2), (2, 1)])))


@pytest.fixture(scope="session")
def surface_relator():
    return (1, 2, -1, -2, 3, 4, -3, -4)
