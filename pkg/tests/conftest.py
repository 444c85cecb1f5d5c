import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from majorityrank import AlternativeSet, Criterion, Profile, Ranking, build_majority

FIVE = ("x1", "x2", "x3", "x4", "x5")

# weighted majority over the three toy voters below
TOY_BEATS = np.array([
    [0, 1, 0, 1, 0],
    [0, 0, 1, 1, 0],
    [1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1],
    [1, 1, 1, 0, 0],
], dtype=bool)


def order_ranking(alternatives: AlternativeSet, order) -> Ranking:
    return Ranking(alternatives, {name: i + 1 for i, name in enumerate(order)})


@pytest.fixture
def toy_profile() -> Profile:
    alternatives = AlternativeSet(FIVE)
    orders = [
        ("x1", "x2", "x3", "x4", "x5"),
        ("x4", "x5", "x2", "x3", "x1"),
        ("x5", "x3", "x1", "x2", "x4"),
    ]
    criteria = [Criterion(f"f{i + 1}", 1, order_ranking(alternatives, order)) for i, order in enumerate(orders)]
    return Profile(alternatives, criteria)


@pytest.fixture
def toy_structure(toy_profile):
    return build_majority(toy_profile)
