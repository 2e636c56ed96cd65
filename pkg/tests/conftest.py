import pytest

from utils.exactmath import Precision


def pytest_addoption(parser):
    parser.addoption("--runlong", action="store_true", default=False, help="run the slow oracle checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runlong"):
        return

    skip_long = pytest.mark.skip(reason="needs --runlong")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip_long)


@pytest.fixture
def prec() -> Precision:
    return Precision(64)
