import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circle_uncertainty.verify import random_corpus


@pytest.fixture(scope="session")
def small_corpus():
    """120 seeded random states on the window [-16, 16]."""
    return random_corpus(120, seed=7)


@pytest.fixture(scope="session")
def acceptance_corpus():
    """The full 1000-state corpus used by the acceptance gate."""
    return random_corpus(1000, seed=20250810)
