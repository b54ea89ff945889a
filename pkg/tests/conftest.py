import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _fresh_caps(monkeypatch):
    """Each test sees the default caps unless it sets ``BIFRM_CAPS`` itself."""
    from bifrm import caps

    monkeypatch.delenv("BIFRM_CAPS", raising=False)
    monkeypatch.setattr(caps, "_current", None)
    yield


def pytest_terminal_summary(terminalreporter):
    """Print the per-criterion PASS/FAIL lines gathered by the acceptance tests."""
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
