import os

import pytest

SEED = int(os.environ.get("KLEINIAN_RP_SEED", "20260"))

# one line per acceptance criterion, filled in by test_acceptance
CRITERIA: dict[str, str] = {}


@pytest.fixture
def seed():
    print(f"seed = {SEED}")
    return SEED


def pytest_report_header(config):
    return f"random seed: {SEED} (override with KLEINIAN_RP_SEED)"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: int(k[1:])):
        terminalreporter.write_line(CRITERIA[key])
