import pytest
from hypothesis import settings

from catent.ingest import INDISCERNIBLES, INTERNSHIP, load_fixture
from catent.model import Dataset

import oracle

# property tests must behave identically on every run of the gate
settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")

# One line per acceptance criterion, filled in by tests/test_acceptance.py
# and echoed after the run so the verdicts are visible even when pytest
# captures stdout.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def internship() -> Dataset:
    return load_fixture(INTERNSHIP)


@pytest.fixture(scope="session")
def indiscernibles() -> Dataset:
    return load_fixture(INDISCERNIBLES)


@pytest.fixture()
def triangle_counterexample() -> Dataset:
    """Three uniform rows whose column triple violates the triangle
    inequality of the SU-distance (see tests/oracle.py)."""
    return Dataset.from_columns(oracle.TRIANGLE_CE_COLUMNS)
