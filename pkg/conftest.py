import os
import sys

import pytest

# Make config/, services/, ui/ and utils/ importable when pytest runs from any directory
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from utils.graph import Decoration, GraphParams  # noqa: E402

S23_PROFILE = [0, 2, 3, 2, 3, 3, 2, 3, 2, 0]


@pytest.fixture
def s23() -> GraphParams:
    return GraphParams(2, 3)


@pytest.fixture
def plain3() -> Decoration:
    return Decoration.plain(3)


@pytest.fixture
def s23_profile():
    return list(S23_PROFILE)
