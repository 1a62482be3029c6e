import pytest

from itype.named import almost_trivial_6, sol_a, sol_b, triv


@pytest.fixture(scope="session")
def a():
    return sol_a()


@pytest.fixture(scope="session")
def b():
    return sol_b()


@pytest.fixture(scope="session", params=[1, 2, 3, 4])
def trivial(request):
    return triv(request.param)


@pytest.fixture(scope="session")
def almost6():
    return almost_trivial_6()
