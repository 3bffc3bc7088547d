import pytest

from omegalg import instances, omegalang, series


@pytest.fixture(scope="session")
def boolean():
    return instances.make_instance("bool")


@pytest.fixture(scope="session")
def nat():
    return instances.make_instance("nat")


@pytest.fixture(scope="session")
def minplus():
    return instances.make_instance("minplus")


@pytest.fixture(scope="session")
def lattice():
    return instances.make_instance("lattice")


@pytest.fixture(scope="session")
def lang6():
    return series.language_instance(bound=6)


@pytest.fixture(scope="session")
def lang_pair6():
    return omegalang.language_pair(bound=6)


@pytest.fixture(scope="session")
def nat_series6():
    return series.nat_series_instance(bound=6)
