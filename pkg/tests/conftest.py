"""Shared fixtures"""

import pytest
from loguru import logger

from graphs import complete, complete_bipartite, cartesian_product, cycle, path
from utils.config import set_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from default settings"""
    set_settings(None)
    yield
    set_settings(None)


@pytest.fixture
def quiet_logs():
    logger.remove()
    yield
    logger.remove()


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def prism():
    return cartesian_product(path(2), cycle(3))


@pytest.fixture
def cube():
    return cartesian_product(path(2), cycle(4))
