import pytest

from tc_algebra.config import SessionConfig


@pytest.fixture
def session():
    return SessionConfig()


@pytest.fixture
def session_n2():
    return SessionConfig(n_vars=2)
