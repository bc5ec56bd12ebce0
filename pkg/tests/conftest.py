import pytest

from manner_itl.domain import Vocabulary
from manner_itl.world import default_ground_truth, partial_ground_truth


@pytest.fixture
def vocab() -> Vocabulary:
    return Vocabulary(
        shapes=("square", "circle", "triangle"),
        adverb_dimensions={
            "slowly": "speed",
            "quickly": "speed",
            "gently": "energy",
            "firmly": "energy",
        },
    )


@pytest.fixture
def full_gt():
    return default_ground_truth()


@pytest.fixture
def partial_gt():
    return partial_ground_truth()
