import pytest

from polycoh import builtin


@pytest.fixture(scope="session")
def cat():
    return builtin()
