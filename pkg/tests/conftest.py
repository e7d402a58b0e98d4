import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypertour.hypercore import build_hypertournament  # noqa: E402


@pytest.fixture
def H4():
    return build_hypertournament(3, 4, [(1, 2, 3), (2, 4, 1), (3, 4, 1), (2, 3, 4)])


@pytest.fixture
def H_asc():
    return build_hypertournament(3, 4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


@pytest.fixture
def C3():
    return build_hypertournament(2, 3, [(1, 2), (2, 3), (3, 1)])
