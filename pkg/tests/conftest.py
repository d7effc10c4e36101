import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("zetaint", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("zetaint")


@pytest.fixture
def mp():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    return mpmath
