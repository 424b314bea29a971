import pytest
from hypothesis import HealthCheck, settings

from skyselect import Dataset, Tuple, normalize

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def d1() -> Dataset:
    """Five 2-d tuples exercised by every operator's worked examples."""
    return Dataset(
        ("a1", "a2"),
        (
            Tuple("a", (1.0, 5.0)),
            Tuple("b", (2.0, 2.0)),
            Tuple("c", (5.0, 1.0)),
            Tuple("d", (4.0, 4.0)),
            Tuple("e", (3.0, 3.0)),
        ),
    )


@pytest.fixture
def d1n(d1) -> Dataset:
    return normalize(d1)
