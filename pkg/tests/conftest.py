import pytest

from downup.gdu import GDUParams, WeightScheme, build, preset


@pytest.fixture(scope="session")
def sl2():
    return preset("sl2")


@pytest.fixture(scope="session")
def conformal_degf():
    return preset("conformal", b=1, scheme="deg-f")


@pytest.fixture(scope="session")
def degf3():
    # deg f = 3 forces the weighted scheme (all-ones would be rejected)
    return build(GDUParams.make(1, 2, "1/2", [1, 0, 0, 1]), WeightScheme.DEG_F)
