import json
import time
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from wedgelie.report import CensusRow

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

SUITE_BUDGET_SECONDS = 60.0

# criterion number -> (passed, description)
ACCEPTANCE: dict[int, tuple[bool, str]] = {}
_session_start = [0.0]


def pytest_sessionstart(session):
    _session_start[0] = time.perf_counter()


@pytest.fixture(scope="session")
def published_census():
    """Generators listed for a=1, dims 3..13, with ASCII labels."""
    rows = json.loads((DATA / "published_census_a1.json").read_text())
    return [CensusRow.from_dict(r) for r in rows]


@pytest.fixture
def acceptance_line():
    def record(number, passed, text):
        ACCEPTANCE[number] = (bool(passed), text)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = time.perf_counter() - _session_start[0]
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, text = ACCEPTANCE[number]
        if number == 4:
            # the wall-clock budget covers the whole session
            within = elapsed < SUITE_BUDGET_SECONDS
            text += f"; session {elapsed:.1f}s (budget {SUITE_BUDGET_SECONDS:.0f}s)"
            passed = passed and within
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}")
