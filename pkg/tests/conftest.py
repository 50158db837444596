import pytest

from towerspread import TowerSpec, coord_frame, form_context, make_context


@pytest.fixture(scope="session")
def ctx13():
    """GF(2^6): q = 2, m = 3."""
    return make_context(1, 3)


@pytest.fixture(scope="session")
def ctx23():
    """GF(2^12): q = 4, m = 3."""
    return make_context(2, 3)


@pytest.fixture(scope="session")
def ctx19():
    """GF(2^18): q = 2, m = 9."""
    return make_context(1, 9)


@pytest.fixture(scope="session")
def frame13(ctx13):
    return coord_frame(ctx13)


@pytest.fixture(scope="session")
def frame23(ctx23):
    return coord_frame(ctx23)


@pytest.fixture(scope="session")
def frame19(ctx19):
    return coord_frame(ctx19)


@pytest.fixture(scope="session")
def fc13(ctx13):
    return form_context(ctx13)


@pytest.fixture(scope="session")
def fc23(ctx23):
    return form_context(ctx23)


@pytest.fixture(scope="session")
def fc19(ctx19):
    return form_context(ctx19)


@pytest.fixture(scope="session")
def tower13(ctx13):
    return TowerSpec(ctx13, (3, 1))


@pytest.fixture(scope="session")
def tower23(ctx23):
    return TowerSpec(ctx23, (3, 1))


@pytest.fixture(scope="session")
def tower19(ctx19):
    return TowerSpec(ctx19, (9, 3, 1))
