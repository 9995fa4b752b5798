import pytest

from contactsurg.diagram import load_diagram

from helpers import FIXTURES


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def fig2():
    return load_diagram(FIXTURES / "fig2.json")


@pytest.fixture
def fig2_reduced():
    return load_diagram(FIXTURES / "fig2_reduced.json")


@pytest.fixture
def trefoil_pos():
    return load_diagram(FIXTURES / "trefoil_tb-6_rot1.json")


@pytest.fixture
def trefoil_neg():
    return load_diagram(FIXTURES / "trefoil_tb-6_rot-1.json")


@pytest.fixture
def empty_diagram():
    return load_diagram(FIXTURES / "empty.json")
