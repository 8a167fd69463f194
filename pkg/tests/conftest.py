import pytest

from predprey import ModelParams, State


@pytest.fixture
def params():
    """The parameter set used throughout the narrative runs."""
    return ModelParams(alpha=0.05, beta=0.3, p=0.4, capacity=1.0)


@pytest.fixture
def s0():
    return State(0.2, 0.3)
