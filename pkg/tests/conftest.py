"""Shared test configuration.

Exact arithmetic makes some property bodies slow by wall-clock standards,
so the deadline is lifted; example counts stay modest because every check
is deterministic once hypothesis picks the inputs.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "workbench",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("workbench")
