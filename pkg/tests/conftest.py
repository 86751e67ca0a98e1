import pytest
from hypothesis import HealthCheck, settings

from tiltcat.rootdata import build_root_system

# deterministic example generation; the artifact is randomless end to end
settings.register_profile(
    "repo", derandomize=True, max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A1")


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def c2():
    return build_root_system("C2")
