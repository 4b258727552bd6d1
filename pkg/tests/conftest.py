import pytest

from resmat import builtin_lattice, builtin_semiring


@pytest.fixture(scope="session")
def chain2():
    return builtin_lattice("chain2")


@pytest.fixture(scope="session")
def chain3():
    return builtin_lattice("chain3")


@pytest.fixture(scope="session")
def chain4():
    return builtin_lattice("chain4")


@pytest.fixture(scope="session")
def square():
    return builtin_lattice("square")


@pytest.fixture(scope="session")
def cube():
    return builtin_lattice("cube")


@pytest.fixture(scope="session")
def m3():
    return builtin_lattice("m3")


@pytest.fixture(scope="session")
def n5():
    return builtin_lattice("n5")


@pytest.fixture(scope="session")
def bool_sr():
    return builtin_semiring("bool")


@pytest.fixture(scope="session")
def maxplus3():
    return builtin_semiring("maxplus3")


@pytest.fixture(scope="session")
def simple3chain():
    return builtin_semiring("simple3chain")
