"""Shared test configuration.

Property-based checks use a bounded hypothesis profile so the whole suite
stays fast and deterministic enough for CI.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "bounded",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bounded")
