import os
import sys

import pytest
from hypothesis import HealthCheck, settings

# Add current directory to path so we can import our modules
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from enumerator import enumerate_unital, orbit_decompose

settings.register_profile(
    "unital",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("unital")

_ENUMERATIONS = {}


def cached_unital(n):
    """U_n, enumerated once per test session."""
    if n not in _ENUMERATIONS:
        _ENUMERATIONS[n] = enumerate_unital(n)
    return _ENUMERATIONS[n]


@pytest.fixture(scope="session")
def unital_sets():
    return {n: cached_unital(n) for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def u4_orbits(unital_sets):
    return orbit_decompose(unital_sets[4])


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the N=5 probes")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long enumerations, skipped unless --runslow is given")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
