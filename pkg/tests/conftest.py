import random
from pathlib import Path

import pytest

from unimon import Monoid
from unimon.matrices import PatternGroup

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

PLANE = PatternGroup.first_row(3)
U3 = PatternGroup.full(3)


def random_monoid(rng, group, removals):
    """Walk down the removal tree: dropping a minimal generator always
    leaves a valid monoid, so every path gives genus == removals."""
    current = Monoid(group, frozenset())
    for _ in range(removals):
        pick = rng.choice(sorted(current.minimal_generators))
        current = Monoid(group, current.gaps | {pick})
    return current


def random_sample(seed, group, count, max_removals):
    rng = random.Random(seed)
    return [
        random_monoid(rng, group, rng.randint(1, max_removals))
        for _ in range(count)
    ]


@pytest.fixture(scope="session")
def plane_samples():
    return random_sample(20260819, PLANE, 50, 8)


@pytest.fixture(scope="session")
def u3_samples():
    return random_sample(20260820, U3, 50, 5)
