import pytest


def pytest_addoption(parser):
    parser.addoption("--seed", action="store", type=int, default=0,
                     help="Base seed of the Monte-Carlo tests")
    parser.addoption("--paths", action="store", type=int, default=200,
                     help="Number of paths of the ensemble tests. The defaults keep the "
                     "suite at desk scale, raise it to tighten the statistical checks.")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture(scope="session")
def n_paths(request):
    return request.config.getoption("--paths")
