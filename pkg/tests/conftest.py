import pytest

from pentachrome import chroma, symmetry
from pentachrome.polytope import build_polytope


@pytest.fixture(scope="session")
def model():
    return build_polytope()


@pytest.fixture(scope="session")
def colourings(model):
    return chroma.enumerate_colourings(model)


@pytest.fixture(scope="session")
def rotations(model):
    return symmetry.rotation_group(model)


@pytest.fixture(scope="session")
def full_symmetries(model):
    return symmetry.full_group(model)
