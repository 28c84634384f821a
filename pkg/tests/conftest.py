import pytest

from millrank import (
    enumerate_rankings,
    independence_report,
    prop1_report,
    prop3_matrix,
    theorem1_probe,
)


@pytest.fixture(scope="session")
def all_n2():
    return list(enumerate_rankings(2))


@pytest.fixture(scope="session")
def all_n3():
    return list(enumerate_rankings(3))


@pytest.fixture(scope="session")
def plurality_probe_n3():
    return theorem1_probe("plurality", 3)


@pytest.fixture(scope="session")
def matrix_n3():
    return prop3_matrix(3)


@pytest.fixture(scope="session")
def independence_n4():
    return independence_report(4)


@pytest.fixture(scope="session")
def prop1_n3():
    return prop1_report(3)
