import pytest

from hardyz.config import CROSSCHECK_CONFIG, DEFAULT_CONFIG


@pytest.fixture(scope="session")
def cfg():
    return DEFAULT_CONFIG


@pytest.fixture(scope="session")
def xcfg():
    """Oracle-grade settings for the tight evaluator cross checks."""
    return CROSSCHECK_CONFIG
