import pytest

from snfc import fixtures, make_network


@pytest.fixture
def n1():
    return fixtures.network("n1")


@pytest.fixture
def butterfly():
    return fixtures.network("butterfly")


@pytest.fixture
def fig2():
    return fixtures.network("fig2")


@pytest.fixture
def line():
    return make_network(
        ["s1", "v", "rho"],
        [("e1", "s1", "v"), ("e2", "v", "rho")],
        ["s1"],
        "rho",
    )
