import pytest
from hypothesis import HealthCheck, settings

from fuzzysna import TFN, FuzzyDigraph

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture
def triangle():
    """Three nodes, two routes from A to C: weak direct, strong via B."""
    return FuzzyDigraph(
        ["A", "B", "C"],
        {
            ("A", "C"): TFN(0.05, 0.1, 0.15),
            ("A", "B"): TFN(0.6, 0.7, 0.8),
            ("B", "C"): TFN(0.7, 0.8, 0.9),
        },
        scale_max=1.0,
    )
