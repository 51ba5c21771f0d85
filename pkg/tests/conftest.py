import pytest

from seifertwrt import new_seifert


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run the long golden rows (levels around 10^4)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def s2357():
    return new_seifert([2, 3, 5, 7])


@pytest.fixture(scope="session")
def s3457():
    return new_seifert([3, 4, 5, 7])
